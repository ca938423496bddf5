"""
Tests for the characteristic constants of optimal configurations.
"""

import sys
import os
import math

import pandas as pd
import pytest

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import config
from geometry.errors import DomainError, NumericError
from geometry.utils.calculations import MAX_DETOUR, detour_gain
from synthesis.solvers import solve_eight, solve_k_star, solve_table

# k: (a*, δ*, π − δ*, μ)
K_STAR_VALUES = {
    2: (1.4782, 0.0926, 3.0490, 1.2219),
    3: (1.8435, 0.2509, 2.8907, 1.5943),
    4: (1.9619, 0.3943, 2.7473, 1.7623),
    5: (1.9969, 0.5164, 2.6252, 1.8526),
    6: (2.0000, 0.5708, 2.5708, 1.8828),
}

# k: (σ, λ)
PAIR_ROOTS = {
    4: (1.0373, 1.7100),
    5: (0.7862, 1.8390),
    6: (0.6957, 1.8751),
}


class TestKStar:
    """Tests for solve_k_star."""

    @pytest.mark.parametrize('k', sorted(K_STAR_VALUES))
    def test_constants(self, k):
        """The solved constants match the printed table."""
        solution = solve_k_star(k)
        a_star, dstar, diameter, mu = K_STAR_VALUES[k]
        assert solution.a_star == pytest.approx(a_star, abs=5e-4)
        assert solution.dstar == pytest.approx(dstar, abs=5e-4)
        assert solution.diameter == pytest.approx(diameter, abs=5e-4)
        assert solution.mu == pytest.approx(mu, abs=5e-4)

    @pytest.mark.parametrize('k', sorted(PAIR_ROOTS))
    def test_pair_roots(self, k):
        """σ and λ match the printed pair-roots table."""
        solution = solve_k_star(k)
        sigma, lam = PAIR_ROOTS[k]
        assert solution.sigma == pytest.approx(sigma, abs=5e-4)
        assert solution.lam == pytest.approx(lam, abs=5e-4)
        assert solution.sigma + solution.lam == pytest.approx(math.pi - solution.dstar, abs=1e-10)

    @pytest.mark.parametrize('k', [2, 3, 4, 5])
    def test_defining_equations(self, k):
        """The solution satisfies its defining equations."""
        solution = solve_k_star(k)
        assert solution.a_star + detour_gain(solution.a_star) == pytest.approx(
            (k - 1) * math.pi / k, abs=1e-10)
        assert detour_gain(solution.mu) == pytest.approx(solution.dstar / 2, abs=1e-10)

    def test_no_pair_roots_for_few_shortcuts(self):
        """k = 2 and 3 have no pair roots."""
        for k in (2, 3):
            solution = solve_k_star(k)
            assert solution.sigma is None
            assert solution.lam is None

    def test_dstar_increases(self):
        """δ*_k increases strictly with k."""
        values = [solve_k_star(k).dstar for k in range(2, 7)]
        assert values == sorted(values)
        assert len(set(values)) == 5

    def test_many_shortcuts_clamp(self):
        """From k = 7 the chord clamps to a diameter."""
        solution = solve_k_star(7)
        assert solution.a_star == 2.0
        assert solution.dstar == pytest.approx(MAX_DETOUR)

    @pytest.mark.parametrize('k', [1, 0, 2.5, True, '3'])
    def test_invalid_k(self, k):
        """Anything but an integer k of at least 2 is rejected."""
        with pytest.raises(DomainError):
            solve_k_star(k)

    def test_table(self):
        """solve_table returns one row per k = 2..6."""
        table = solve_table()
        assert isinstance(table, pd.DataFrame)
        assert list(table['k']) == [2, 3, 4, 5, 6]
        assert {'a_star', 'dstar', 'diameter', 'mu', 'sigma', 'lam'} <= set(table.columns)
        assert table['sigma'].isna().sum() == 2


class TestEight:
    """Tests for the eight-shortcut constants."""

    def test_constants(self):
        """The ten-digit eight-shortcut constants are reproduced."""
        solution = solve_eight()
        assert solution.dstar == pytest.approx(0.5822245291, abs=5e-5)
        assert solution.a1 == pytest.approx(1.999870869, abs=5e-5)
        assert solution.a2 == pytest.approx(0.988571799, abs=5e-5)

    def test_relations(self):
        """The eight-shortcut constants satisfy their relations."""
        solution = solve_eight()
        a1, a2, dstar = solution.a1, solution.a2, solution.dstar
        assert detour_gain(a1) + detour_gain(a2) == pytest.approx(dstar, abs=1e-9)
        assert a2 == pytest.approx(math.pi / 2 - dstar, abs=1e-12)
        assert a1 + detour_gain(a1) == pytest.approx(math.pi - dstar, abs=1e-9)
        assert math.pi - a1 - dstar > math.pi / 6
        assert solution.diameter < math.pi / 2 + 1

    def test_bracket_without_root(self, monkeypatch):
        """A bracket without a root raises NumericError."""
        monkeypatch.setattr(config, 'EIGHT_DSTAR_BRACKET', (0.59, 0.6))
        with pytest.raises(NumericError):
            solve_eight()


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
