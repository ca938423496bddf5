"""
The strip of near-antipodal point pairs and the regions shortcuts cover in it.

A pair (p, q) with angle in [π − δ*, π + δ*] is the strip point (θ, ξ) with
p = θ − ξ/2 and q = θ + π + ξ/2; (θ, ξ) and (θ + π, −ξ) are the same pair.
A shortcut of length a centred at φ serves (distance ≤ π − δ*) exactly the pairs
in two closed rectangles of width π − a − δ*:

    θ ∈ φ + [a/2 + δ*/2, π − a/2 − δ*/2],  ξ ∈ [max(−δ*, δ* − 2δ), min(δ*, 2(π − a − δ) − δ*)]

and the same rectangle shifted by π with ξ negated.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

import config
from geometry.errors import DomainError
from geometry.models import StripCoord, StripRect
from geometry.utils.calculations import TWO_PI, ccw_angle, detour_gain, normalize_angle

MAX_DSTAR = math.pi - 2


@dataclass(frozen=True)
class CoverResult:
    covered: bool
    gap: Optional[tuple] = None     # (theta_lo, theta_hi, xi) of one uncovered piece


# ─── Coordinates ────────────────────────────────────────────────────

def pair_to_strip(p, q, dstar):
    """
    Strip coordinates of the pair (p, q), or None if its angle is outside [π − δ*, π + δ*].

    Returns the representative with θ in [0, π).
    """
    _check_dstar(dstar)
    p = normalize_angle(p)
    xi = ccw_angle(p, q) - math.pi
    if abs(xi) > dstar + config.ANGLE_WRAP_TOL:
        return None
    xi = min(max(xi, -dstar), dstar)
    theta = normalize_angle(p + xi / 2)
    if theta >= math.pi:
        theta, xi = theta - math.pi, -xi
    return StripCoord(theta, xi + 0.0, dstar)


def strip_to_pair(coord):
    """The point pair (p, q) represented by a strip coordinate."""
    return (normalize_angle(coord.theta - coord.xi / 2),
            normalize_angle(coord.theta + math.pi + coord.xi / 2))


# ─── Regions of one shortcut ───────────────────────────────────────

def region_rectangles(a, dstar, center=0.0, owner=None):
    """
    The two rectangles of pairs served by a shortcut of length a centred at `center`.

    Args:
        a (float): Chord length in (0, 2]
        dstar (float): Strip half-height in [0, π − 2]
        center (float): Midpoint of the shortcut's ccw arc
        owner (int): Optional shortcut index carried by the rectangles

    Returns:
        tuple[StripRect, StripRect]: (top-anchored, bottom-anchored); both empty
        when a + δ* ≥ π
    """
    if not (0 < a <= 2 + config.ANGLE_WRAP_TOL):
        raise DomainError(f"chord length must lie in (0, 2], got {a}")
    _check_dstar(dstar)
    a = min(a, 2.0)
    width = math.pi - a - dstar
    left = center + a / 2 + dstar / 2
    if width <= 0:
        empty = StripRect(left, 0.0, 0.0, 0.0, dstar, owner)
        return empty, StripRect(left + math.pi, 0.0, 0.0, 0.0, dstar, owner)

    delta = detour_gain(a)
    low = max(-dstar, dstar - 2 * delta)
    high = min(dstar, 2 * (math.pi - a - delta) - dstar)
    return (StripRect(left, width, low, high, dstar, owner),
            StripRect(left + math.pi, width, -high, -low, dstar, owner))


def region_contains(coord, s, dstar=None):
    """
    Whether the pair at `coord` is within π − δ* using only shortcut `s`.

    Evaluates the closed-form route length for the shortcut's canonical position
    rather than the rectangles.
    """
    dstar = coord.dstar if dstar is None else dstar
    theta = ccw_angle(s.center, coord.theta)
    xi = coord.xi
    if theta > math.pi:
        theta, xi = theta - math.pi, -xi
    return shortcut_route_length(s.length, theta, xi) <= math.pi - dstar


def shortcut_route_length(a, theta, xi):
    """
    Length of the best route through a shortcut of length a centred at 0, for θ in [0, π].

    Four cases, depending on whether p lies before v and whether q lies beyond u.
    """
    delta = detour_gain(a)
    span = a + 2 * delta
    before_v = xi > 2 * theta - span
    beyond_u = xi > 2 * math.pi - span - 2 * theta
    if before_v and beyond_u:
        return 2 * (a + delta) - math.pi + xi
    if before_v:
        return math.pi - 2 * delta + 2 * (span / 2 - theta)
    if beyond_u:
        return 2 * (theta - (math.pi - span / 2)) + math.pi - 2 * delta
    return math.pi - 2 * delta - xi


def midline_cut(a, dstar):
    """Total length of the region on the midline ξ = 0."""
    width = max(math.pi - a - dstar, 0.0)
    return 2 * width if detour_gain(a) >= dstar / 2 else 0.0


def boundary_cut(a, dstar):
    """Length of the region on one boundary line ξ = δ*."""
    width = max(math.pi - a - dstar, 0.0)
    delta = detour_gain(a)
    if delta >= dstar:
        return 2 * width
    if dstar <= math.pi - a - delta:
        return width
    return 0.0


def region_area(a, dstar):
    """
    Area of the region: 4δ*(π − a − δ*) if δ(a) ≥ δ*, else 4δ(a)(π − a − δ*).

    Accepts numpy arrays of chord lengths.
    """
    width = np.maximum(math.pi - np.asarray(a, dtype=float) - dstar, 0.0)
    area = 4 * np.minimum(detour_gain(a), dstar) * width
    return float(area) if np.ndim(area) == 0 else area


def rectangle_area(a, dstar):
    """Summed area of the two region rectangles."""
    return sum(r.area for r in region_rectangles(a, dstar))


def config_rectangles(shortcuts, dstar):
    """Non-empty region rectangles of every shortcut, tagged with its index."""
    rects = []
    for index, s in enumerate(shortcuts):
        rects.extend(r for r in region_rectangles(s.length, dstar, s.center, index)
                     if not r.is_empty)
    return rects


# ─── Cover checking ─────────────────────────────────────────────────

def line_gaps(rects, xi, guard=None):
    """Uncovered θ-intervals of the line ξ = xi; closed rectangles widened by `guard`."""
    guard = config.COVER_GUARD if guard is None else guard
    pieces = []
    for r in rects:
        if r.is_empty or xi < r.xi_low - guard or xi > r.xi_high + guard:
            continue
        pieces.extend(r.theta_intervals(guard))
    pieces.sort()

    gaps = []
    reach = 0.0
    for lo, hi in pieces:
        if lo > reach:
            gaps.append((reach, lo))
        reach = max(reach, hi)
    if reach < TWO_PI:
        gaps.append((reach, TWO_PI))
    return gaps


def covers(rects, target=None, dstar=None):
    """
    Check whether rectangles cover the line ξ = target, or the whole strip if target is None.

    The whole strip is covered iff every breakpoint line and every line between
    consecutive breakpoints is covered.

    Raises:
        DomainError: if the rectangles (or `dstar`) disagree on δ*
    """
    dstar = _common_dstar(rects, dstar)
    if target is not None:
        lines = [float(target)]
    else:
        if dstar is None:
            raise DomainError("a full-strip cover check needs δ*")
        marks = _breakpoints(rects, dstar)
        lines = sorted(set(marks) | {(lo + hi) / 2 for lo, hi in zip(marks, marks[1:])})
    for xi in lines:
        gaps = line_gaps(rects, xi)
        if gaps:
            lo, hi = gaps[0]
            return CoverResult(False, (lo, hi, xi))
    return CoverResult(True, None)


def uncovered_cells(rects, dstar):
    """Uncovered parts of the strip as rectangles (zero height on breakpoint lines)."""
    dstar = _common_dstar(rects, dstar)
    marks = _breakpoints(rects, dstar)
    cells = []
    for lo, hi in zip(marks, marks[1:]):
        for g_lo, g_hi in line_gaps(rects, (lo + hi) / 2):
            cells.append(StripRect(g_lo, g_hi - g_lo, lo, hi, dstar))
    for xi in marks:
        for g_lo, g_hi in line_gaps(rects, xi):
            cells.append(StripRect(g_lo, g_hi - g_lo, xi, xi, dstar))
    return cells


def _breakpoints(rects, dstar):
    marks = {-dstar, 0.0, dstar}
    for r in rects:
        if r.is_empty:
            continue
        for value in (r.xi_low, r.xi_high):
            if -dstar <= value <= dstar:
                marks.add(value)
    return sorted(marks)


def _common_dstar(rects, dstar=None):
    values = [r.dstar for r in rects]
    if dstar is not None:
        values.append(float(dstar))
    if not values:
        return None
    for value in values:
        if abs(value - values[0]) > config.ANGLE_WRAP_TOL:
            raise DomainError(f"rectangles belong to different strips: δ* = {values[0]} and {value}")
    return values[0]


def _check_dstar(dstar):
    if not (-config.ANGLE_WRAP_TOL <= dstar <= MAX_DSTAR + config.ANGLE_WRAP_TOL):
        raise DomainError(f"δ* must lie in [0, π − 2], got {dstar}")
