"""
Umbra, deep umbra and radiance of a shortcut.

For s = uv with length a, span α and detour gain δ:
- inner umbra: [u + δ, v − δ], length a, centred on the ccw arc u→v
- outer umbra: the inner umbra rotated by π
- deep umbra: [u + α(δ), v − α(δ)] inside the inner umbra
- radiance: the two arcs v → u + π and v + π → u, each of length π − α
"""

import math

from geometry.errors import DegenerateShortcutError
from geometry.models import Arc
from geometry.utils.calculations import detour_gain, span_angle


def umbra(s):
    """Return (inner, outer) umbra arcs of shortcut `s`."""
    _require_proper(s)
    inner = Arc(s.u + s.detour, s.length)
    outer = Arc(s.u + s.detour + math.pi, s.length)
    return inner, outer


def deep_umbra(s):
    """Sub-arc of the inner umbra whose points never benefit from `s`."""
    _require_proper(s)
    shift = span_angle(s.detour)
    return Arc(s.u + shift, max(s.span - 2 * shift, 0.0))


def deep_umbra_length(a):
    """Length a − 4·δ(δ(a)) of the deep umbra of a chord of length a."""
    return a - 4 * detour_gain(detour_gain(a))


def radiance(s):
    """The two arcs complementary to the umbra."""
    _require_proper(s)
    width = max(math.pi - s.span, 0.0)
    return Arc(s.v, width), Arc(s.v + math.pi, width)


def in_umbra(s, theta, eps=0.0):
    """Whether `theta` lies in U(s) widened (eps > 0) or shrunk (eps < 0) by eps."""
    inner, outer = umbra(s)
    return inner.contains(theta, eps) or outer.contains(theta, eps)


def _require_proper(s):
    if s.length <= 0:
        raise DegenerateShortcutError(f"shortcut {s} has zero length")
