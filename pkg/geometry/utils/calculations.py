"""
Circle and chord calculation utilities for the shortcut toolkit.

Provides the elementary formulas every other module builds on:
- Angle normalization and arc distances on the unit circle
- Span angle α(a) and detour gain δ(a) of a chord of length a
- Inverse of the detour gain and of a + δ(a) (monotone bisection)
- A scipy bisection wrapper that reports failures as NumericError
"""

import math

import numpy as np
from scipy import optimize

import config
from geometry.errors import DomainError, NumericError

TWO_PI = 2.0 * math.pi
MAX_DETOUR = math.pi / 2 - 1      # δ(2)
MAX_BUDGET = math.pi / 2 + 1      # 2 + δ(2)


def normalize_angle(theta):
    """
    Reduce an angle into [0, 2π).

    Values within config.ANGLE_WRAP_TOL below 2π are mapped to 0 so that
    the wrap point has a single representative.

    Args:
        theta (float): Angle in radians, any real value

    Returns:
        float: Equivalent angle in [0, 2π)
    """
    value = float(theta) % TWO_PI
    if value >= TWO_PI - config.ANGLE_WRAP_TOL:
        return 0.0
    return value + 0.0


def ccw_angle(start, end):
    """Counter-clockwise arc length from `start` to `end`, in [0, 2π)."""
    return normalize_angle(end - start)


def circle_distance(p, q):
    """
    Length of the shorter circle arc between two angles.

    Works elementwise on numpy arrays.
    """
    diff = np.abs(np.asarray(p, dtype=float) - np.asarray(q, dtype=float)) % TWO_PI
    result = np.minimum(diff, TWO_PI - diff)
    return _as_output(result)


def span_angle(a):
    """
    Central angle spanned by a chord of length a.

    α(a) = 2·arcsin(a/2)

    Args:
        a (float | np.ndarray): Chord length in [0, 2]

    Returns:
        float | np.ndarray: Span in [0, π]
    """
    chord = _check_chord(a)
    return _as_output(2.0 * np.arcsin(chord / 2.0))


def detour_gain(a):
    """
    Detour gain of a chord of length a.

    δ(a) = arcsin(a/2) − a/2, so that α(a) = a + 2δ(a).

    Args:
        a (float | np.ndarray): Chord length in [0, 2]

    Returns:
        float | np.ndarray: Detour gain in [0, π/2 − 1]
    """
    chord = _check_chord(a)
    half = chord / 2.0
    return _as_output(np.arcsin(half) - half)


def chord_length(span):
    """Chord length 2·sin(α/2) for a span α in [0, π]."""
    arr = np.asarray(span, dtype=float)
    if np.any(arr < -config.ANGLE_WRAP_TOL) or np.any(arr > math.pi + config.ANGLE_WRAP_TOL):
        raise DomainError(f"span must lie in [0, π], got {span}")
    return _as_output(2.0 * np.sin(np.clip(arr, 0.0, math.pi) / 2.0))


def inverse_detour(d):
    """
    Chord length whose detour gain equals d.

    δ is strictly increasing on [0, 2], so plain bisection suffices.

    Args:
        d (float): Detour gain in [0, π/2 − 1]

    Returns:
        float: The unique a in [0, 2] with δ(a) = d
    """
    d = float(d)
    if d < -config.ANGLE_WRAP_TOL or d > MAX_DETOUR + config.ANGLE_WRAP_TOL:
        raise DomainError(f"detour gain must lie in [0, π/2 − 1], got {d}")
    if d <= 0.0:
        return 0.0
    if d >= MAX_DETOUR:
        return 2.0
    return solve_monotone(lambda x: detour_gain(x) - d, 0.0, 2.0, xtol=config.BISECTION_XTOL)


def chord_for_budget(budget):
    """
    Chord length a with a + δ(a) equal to `budget`.

    Args:
        budget (float): Target value in [0, π/2 + 1]

    Returns:
        float: The unique a in [0, 2] solving a + δ(a) = budget
    """
    budget = float(budget)
    if budget < -config.ANGLE_WRAP_TOL or budget > MAX_BUDGET + config.ANGLE_WRAP_TOL:
        raise DomainError(f"a + δ(a) ranges over [0, π/2 + 1], got {budget}")
    if budget <= 0.0:
        return 0.0
    if budget >= MAX_BUDGET:
        return 2.0
    return solve_monotone(lambda x: x + detour_gain(x) - budget, 0.0, 2.0)


def solve_monotone(func, lo, hi, xtol=None):
    """
    Bisection root of `func` on [lo, hi] via scipy.

    Raises:
        NumericError: if the bracket has no sign change or bisection does not converge
    """
    xtol = config.SOLVER_XTOL if xtol is None else xtol
    try:
        return float(optimize.bisect(func, lo, hi, xtol=xtol, maxiter=config.SOLVER_MAXITER))
    except (ValueError, RuntimeError) as exc:
        raise NumericError(f"bisection on [{lo}, {hi}] failed: {exc}") from exc


def _check_chord(a):
    arr = np.asarray(a, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < -config.ANGLE_WRAP_TOL) or np.any(arr > 2.0 + config.ANGLE_WRAP_TOL):
        raise DomainError(f"chord length must lie in [0, 2], got {a}")
    return np.clip(arr, 0.0, 2.0)


def _as_output(arr):
    if np.ndim(arr) == 0:
        return float(arr)
    return arr
