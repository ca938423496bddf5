"""
Domain types: arcs, shortcuts, configurations, path witnesses and strip cells.

All types are frozen dataclasses; angles are normalized into [0, 2π) when constructed.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Union

import config
from geometry.errors import DegenerateShortcutError, DomainError
from geometry.utils.calculations import (
    TWO_PI, ccw_angle, chord_length, detour_gain, normalize_angle, span_angle
)


@dataclass(frozen=True)
class Arc:
    """Counter-clockwise arc of the unit circle starting at `start`."""

    start: float
    length: float

    def __post_init__(self):
        if self.length < -config.ANGLE_WRAP_TOL or self.length > TWO_PI + config.ANGLE_WRAP_TOL:
            raise DomainError(f"arc length must lie in [0, 2π], got {self.length}")
        object.__setattr__(self, 'start', normalize_angle(self.start))
        object.__setattr__(self, 'length', min(max(float(self.length), 0.0), TWO_PI))

    @classmethod
    def between(cls, start, end):
        """Arc running counter-clockwise from `start` to `end`."""
        return cls(start, ccw_angle(start, end))

    @property
    def end(self):
        return normalize_angle(self.start + self.length)

    @property
    def midpoint(self):
        return normalize_angle(self.start + self.length / 2)

    def contains(self, theta, eps=0.0):
        """
        Membership of `theta` in the closed arc widened by `eps` on both sides.

        A negative `eps` shrinks the arc, which turns the test into an interior test.
        """
        reach = self.length + 2 * eps
        if reach < 0:
            return False
        if reach >= TWO_PI:
            return True
        return ccw_angle(self.start - eps, theta) <= reach


@dataclass(frozen=True)
class Shortcut:
    """
    A chord uv whose counter-clockwise arc u→v is the shorter arc.

    Length, span and detour gain are derived from the endpoints, so a shortcut
    rebuilt from its stored endpoints is identical to the original.
    """

    u: float
    v: float
    span: float = field(init=False, repr=False, compare=False)
    length: float = field(init=False, repr=False, compare=False)
    detour: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        u = normalize_angle(self.u)
        v = normalize_angle(self.v)
        span = ccw_angle(u, v)
        if span > math.pi + config.ANGLE_WRAP_TOL:
            raise DomainError(
                f"ccw arc from u={u} to v={v} is {span}, longer than π; swap the endpoints"
            )
        span = min(span, math.pi)
        length = chord_length(span)
        if length <= 0.0:
            raise DegenerateShortcutError(f"shortcut endpoints coincide at {u}")
        object.__setattr__(self, 'u', u)
        object.__setattr__(self, 'v', v)
        object.__setattr__(self, 'span', span)
        object.__setattr__(self, 'length', length)
        object.__setattr__(self, 'detour', detour_gain(length))

    @classmethod
    def chord(cls, center, a):
        """Shortcut of length `a` whose ccw arc is centred at angle `center`."""
        if a <= 0:
            raise DegenerateShortcutError(f"shortcut length must be positive, got {a}")
        half = span_angle(a) / 2
        return cls(center - half, center + half)

    @classmethod
    def from_endpoints(cls, x, y):
        """Shortcut between two points, oriented so the ccw arc is the shorter one."""
        if ccw_angle(x, y) <= math.pi:
            return cls(x, y)
        return cls(y, x)

    @property
    def center(self):
        """Midpoint of the ccw arc u→v (the inner umbra is centred here)."""
        return normalize_angle(self.u + self.span / 2)

    def rotated(self, phi):
        return Shortcut(self.u + phi, self.v + phi)

    def to_dict(self):
        return {'u': self.u, 'v': self.v}


@dataclass(frozen=True)
class Configuration:
    """An ordered multiset of shortcuts plus a label and provenance metadata."""

    shortcuts: tuple = ()
    label: str = ''
    provenance: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, 'shortcuts', tuple(self.shortcuts))

    def __len__(self):
        return len(self.shortcuts)

    def __iter__(self):
        return iter(self.shortcuts)

    def __getitem__(self, index):
        return self.shortcuts[index]

    def with_shortcut(self, shortcut):
        return Configuration(self.shortcuts + (shortcut,), self.label, dict(self.provenance))

    def endpoints(self):
        points = []
        for s in self.shortcuts:
            points.extend((s.u, s.v))
        return points

    @property
    def target_dstar(self):
        """δ* the configuration was synthesized for, when known."""
        value = self.provenance.get('target_dstar')
        return None if value is None else float(value)


@dataclass(frozen=True)
class ArcLeg:
    start: float
    end: float
    ccw: bool
    length: float

    kind = 'arc'


@dataclass(frozen=True)
class ShortcutLeg:
    index: int
    shortcut: Shortcut
    entry: float
    exit: float
    length: float

    kind = 'shortcut'


Leg = Union[ArcLeg, ShortcutLeg]


@dataclass(frozen=True)
class PathWitness:
    """A shortest path as alternating arc and shortcut legs, p to q."""

    p: float
    q: float
    total: float
    legs: tuple = ()

    @property
    def shortcut_legs(self):
        return [leg for leg in self.legs if isinstance(leg, ShortcutLeg)]

    @property
    def shortcut_indices(self):
        return [leg.index for leg in self.shortcut_legs]

    def reversed(self):
        legs = []
        for leg in reversed(self.legs):
            if isinstance(leg, ArcLeg):
                legs.append(ArcLeg(leg.end, leg.start, not leg.ccw, leg.length))
            else:
                legs.append(ShortcutLeg(leg.index, leg.shortcut, leg.exit, leg.entry, leg.length))
        return PathWitness(self.q, self.p, self.total, tuple(legs))

    def to_dict(self):
        legs = []
        for leg in self.legs:
            if isinstance(leg, ArcLeg):
                legs.append({'kind': 'arc', 'from': leg.start, 'to': leg.end,
                             'direction': 'ccw' if leg.ccw else 'cw', 'length': leg.length})
            else:
                legs.append({'kind': 'shortcut', 'index': leg.index, 'from': leg.entry,
                             'to': leg.exit, 'length': leg.length})
        return {'p': self.p, 'q': self.q, 'total': self.total, 'legs': legs}


@dataclass(frozen=True)
class DiameterBound:
    """Certified interval [lo, hi] for the diameter, with the pair realizing lo."""

    lo: float
    hi: float
    p: float
    q: float
    step: float
    path: Optional[PathWitness] = None

    @property
    def witness(self):
        return (self.p, self.q)


@dataclass(frozen=True)
class StripCoord:
    """Point (θ, ξ) of the strip [0, 2π) × [−δ*, δ*]; p = θ − ξ/2, q = θ + π + ξ/2."""

    theta: float
    xi: float
    dstar: float

    def __post_init__(self):
        if abs(self.xi) > self.dstar + config.ANGLE_WRAP_TOL:
            raise DomainError(f"|ξ| = {abs(self.xi)} exceeds δ* = {self.dstar}")
        object.__setattr__(self, 'theta', normalize_angle(self.theta))


@dataclass(frozen=True)
class StripRect:
    """
    Closed axis-parallel rectangle on the strip cylinder.

    The θ-range starts at `theta_start` and runs `width` counter-clockwise, possibly
    across 2π; the ξ-range is [xi_low, xi_high].
    """

    theta_start: float
    width: float
    xi_low: float
    xi_high: float
    dstar: float
    owner: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'theta_start', normalize_angle(self.theta_start))
        object.__setattr__(self, 'width', min(float(self.width), TWO_PI))

    @property
    def height(self):
        return self.xi_high - self.xi_low

    @property
    def is_empty(self):
        return self.width <= 0 or self.height < 0

    @property
    def area(self):
        return 0.0 if self.is_empty else self.width * self.height

    def theta_intervals(self, guard=0.0):
        """Non-wrapping θ-pieces inside [0, 2π], each widened by `guard`."""
        if self.is_empty:
            return []
        lo = self.theta_start - guard
        hi = self.theta_start + self.width + guard
        if hi - lo >= TWO_PI:
            return [(0.0, TWO_PI)]
        if lo < 0:
            return [(lo + TWO_PI, TWO_PI), (0.0, hi)]
        if hi > TWO_PI:
            return [(lo, TWO_PI), (0.0, hi - TWO_PI)]
        return [(lo, hi)]

    def contains(self, theta, xi, eps=0.0):
        if self.is_empty:
            return False
        if xi < self.xi_low - eps or xi > self.xi_high + eps:
            return False
        return Arc(self.theta_start, self.width).contains(theta, eps)
