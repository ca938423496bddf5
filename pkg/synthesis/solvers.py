"""
Characteristic constants of optimal shortcut configurations.

- solve_k_star: a*_k, δ*_k, μ_k and (where they exist) σ_k, λ_k for k shortcuts
- solve_eight: chord lengths and δ* of the eight-shortcut construction
- solve_table: both tables as a pandas DataFrame
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Optional

import pandas as pd

import config
from geometry.errors import DomainError
from geometry.utils.calculations import (
    MAX_BUDGET, MAX_DETOUR, chord_for_budget, detour_gain, inverse_detour, solve_monotone
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class KStarSolution:
    k: int
    a_star: float
    dstar: float
    mu: float
    sigma: Optional[float] = None
    lam: Optional[float] = None

    @property
    def diameter(self):
        return math.pi - self.dstar

    def to_dict(self):
        data = asdict(self)
        data['diameter'] = self.diameter
        return data


@dataclass(frozen=True)
class EightSolution:
    a1: float
    a2: float
    dstar: float

    @property
    def diameter(self):
        return math.pi - self.dstar

    def to_dict(self):
        data = asdict(self)
        data['diameter'] = self.diameter
        return data


def solve_k_star(k):
    """
    Solve a + δ(a) = (k−1)π/k and derive the remaining constants.

    For k ≥ 6 the equation has no root in [0, 2] and a* is clamped to 2.

    Args:
        k (int): Number of shortcuts, at least 2

    Returns:
        KStarSolution
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise DomainError(f"k must be an integer ≥ 2, got {k!r}")

    budget = (k - 1) * math.pi / k
    if budget >= MAX_BUDGET:
        a_star, dstar = 2.0, MAX_DETOUR
    else:
        a_star = chord_for_budget(budget)
        dstar = detour_gain(a_star)
    mu = inverse_detour(dstar / 2)
    sigma, lam = _pair_roots(dstar)
    log.debug("k=%d: a*=%.12f δ*=%.12f μ=%.12f σ=%s λ=%s", k, a_star, dstar, mu, sigma, lam)
    return KStarSolution(k, a_star, dstar, mu, sigma, lam)


def _pair_roots(dstar):
    """Roots σ < λ of δ(x) + δ(π − δ* − x) = δ*/2, or (None, None)."""
    total = math.pi - dstar
    lo, hi = max(total - 2.0, 0.0), min(2.0, total)
    middle = total / 2

    def excess(x):
        return detour_gain(x) + detour_gain(total - x) - dstar / 2

    if not (excess(middle) < 0 < excess(lo)):
        return None, None
    return solve_monotone(excess, lo, middle), solve_monotone(excess, middle, hi)


def solve_eight():
    """
    Root in δ* of δ(a₁) + δ(a₂) = δ* with a₂ = π/2 − δ* and a₁ + δ(a₁) = π − δ*.

    Raises:
        NumericError: if the bracket config.EIGHT_DSTAR_BRACKET holds no root
    """

    def residual(dstar):
        a1 = chord_for_budget(math.pi - dstar)
        a2 = math.pi / 2 - dstar
        return detour_gain(a1) + detour_gain(a2) - dstar

    lo, hi = config.EIGHT_DSTAR_BRACKET
    dstar = solve_monotone(residual, lo, hi)
    solution = EightSolution(chord_for_budget(math.pi - dstar), math.pi / 2 - dstar, dstar)
    log.debug("eight: %s", solution)
    return solution


def solve_table(ks=range(2, 7)):
    """Solutions for several k as a DataFrame (one row per k)."""
    rows = [solve_k_star(k).to_dict() for k in ks]
    columns = ['k', 'a_star', 'dstar', 'diameter', 'mu', 'sigma', 'lam']
    return pd.DataFrame(rows)[columns]
