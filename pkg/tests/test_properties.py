"""
Property-based tests for the metric and the strip regions.

Hypothesis draws random configurations and point pairs; every invariant here
must hold for any valid input. The seeded sweeps repeat the same invariants at
fixed sample counts with numpy generators.
"""

import sys
import os
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from geometry.metric import distance, single_shortcut_distance, witness_violations
from geometry.models import Configuration, Shortcut, StripCoord
from geometry.strip import (
    MAX_DSTAR, pair_to_strip, region_contains, region_rectangles, strip_to_pair
)
from geometry.utils.calculations import TWO_PI, circle_distance

REGION_SAMPLES = 100_000
CONFIG_SAMPLES = 10_000
MIN_CHORD = 1e-3

# ─── Strategies ──────────────────────────────────────────────────────

angles = st.floats(min_value=0.0, max_value=TWO_PI, exclude_max=True,
                   allow_nan=False, allow_infinity=False)

shortcuts = st.builds(Shortcut.chord, center=angles,
                      a=st.floats(min_value=0.05, max_value=2.0, allow_nan=False))

region_shortcuts = st.builds(Shortcut.chord, center=angles,
                             a=st.floats(min_value=MIN_CHORD, max_value=2.0, allow_nan=False))

configurations = st.lists(shortcuts, min_size=0, max_size=8).map(
    lambda items: Configuration(tuple(items)))

dstars = st.floats(min_value=0.0, max_value=MAX_DSTAR, allow_nan=False)


def _region_agrees(s, coord):
    """None on a tie with π − δ*, else whether both region tests match the metric."""
    p, q = strip_to_pair(coord)
    length = single_shortcut_distance(s, p, q)
    if abs(length - (math.pi - coord.dstar)) <= 1e-7:
        return None
    inside = length < math.pi - coord.dstar
    rects = region_rectangles(s.length, coord.dstar, s.center)
    return (region_contains(coord, s) == inside
            and any(r.contains(coord.theta, coord.xi) for r in rects) == inside)


def _random_config(rng):
    count = int(rng.integers(0, 9))
    return Configuration(tuple(Shortcut.chord(rng.uniform(0, TWO_PI), rng.uniform(0.05, 2.0))
                               for _ in range(count)))


class TestMetricProperties:
    """Invariants of the shortest-path metric."""

    @given(config=configurations, p=angles, q=angles)
    @settings(max_examples=200, deadline=None)
    def test_symmetric(self, config, p, q):
        """d(p, q) equals d(q, p)."""
        assert distance(config, p, q)[0] == distance(config, q, p)[0]

    @given(config=configurations, p=angles, q=angles)
    @settings(max_examples=200, deadline=None)
    def test_bounded_by_circle_distance(self, config, p, q):
        """Shortcuts never make a path longer than the circle arc."""
        length, _ = distance(config, p, q)
        assert 0.0 <= length <= circle_distance(p, q) + 1e-12

    @given(config=configurations, p=angles, p2=angles, q=angles)
    @settings(max_examples=200, deadline=None)
    def test_lipschitz(self, config, p, p2, q):
        """Moving one endpoint changes the distance by at most the move."""
        moved = abs(distance(config, p, q)[0] - distance(config, p2, q)[0])
        assert moved <= circle_distance(p, p2) + 1e-9

    @given(config=configurations, extra=shortcuts, p=angles, q=angles)
    @settings(max_examples=200, deadline=None)
    def test_more_shortcuts_never_longer(self, config, extra, p, q):
        """Adding a shortcut never lengthens a shortest path."""
        before, _ = distance(config, p, q)
        after, _ = distance(config.with_shortcut(extra), p, q)
        assert after <= before + 1e-12

    @given(config=configurations, p=angles, q=angles)
    @settings(max_examples=200, deadline=None)
    def test_witness_consistent(self, config, p, q):
        """The returned witness path obeys every witness rule."""
        length, witness = distance(config, p, q)
        assert witness_violations(config, p, q, length, witness) == []

    @given(s=shortcuts, p=angles, q=angles)
    @settings(max_examples=300, deadline=None)
    def test_single_shortcut_closed_form(self, s, p, q):
        """With one shortcut the graph search matches the closed form."""
        length, _ = distance(Configuration((s,)), p, q)
        assert math.isclose(length, single_shortcut_distance(s, p, q), abs_tol=1e-12)


class TestStripProperties:
    """Invariants of strip coordinates and regions."""

    @given(p=angles, offset=st.floats(min_value=-1.0, max_value=1.0), dstar=dstars)
    @settings(max_examples=300, deadline=None)
    def test_round_trip(self, p, offset, dstar):
        """A pair inside the strip survives the trip to strip coordinates and back."""
        q = p + math.pi + offset * dstar
        coord = pair_to_strip(p, q, dstar)
        assert coord is not None
        x, y = strip_to_pair(coord)
        assert min(circle_distance(x, p) + circle_distance(y, q),
                   circle_distance(x, q) + circle_distance(y, p)) < 1e-9

    @given(s=region_shortcuts, dstar=dstars, theta=angles,
           fraction=st.floats(min_value=-1.0, max_value=1.0))
    @settings(max_examples=500, deadline=None)
    def test_region_matches_metric(self, s, dstar, theta, fraction):
        """A pair is in a shortcut's region exactly when the shortcut brings it within π − δ*."""
        verdict = _region_agrees(s, StripCoord(theta, fraction * dstar, dstar))
        assume(verdict is not None)
        assert verdict


class TestSeededSweeps:
    """The same invariants over fixed numbers of seeded numpy samples."""

    def test_region_sweep(self):
        """Region membership matches the metric on every non-tied sample."""
        rng = np.random.default_rng(2024)
        disagreements, ties = 0, 0
        for _ in range(REGION_SAMPLES):
            s = Shortcut.chord(rng.uniform(0, TWO_PI), rng.uniform(MIN_CHORD, 2.0))
            dstar = rng.uniform(0.0, MAX_DSTAR)
            coord = StripCoord(rng.uniform(0, TWO_PI), rng.uniform(-dstar, dstar), dstar)
            verdict = _region_agrees(s, coord)
            if verdict is None:
                ties += 1
            elif not verdict:
                disagreements += 1
        assert disagreements == 0
        assert ties < REGION_SAMPLES // 100

    def test_metric_sweep(self):
        """Symmetry, Lipschitz, monotonicity and witness rules on random configurations."""
        rng = np.random.default_rng(2025)
        for _ in range(CONFIG_SAMPLES):
            config = _random_config(rng)
            p, p2, q = rng.uniform(0, TWO_PI, size=3)
            length, witness = distance(config, p, q)
            assert distance(config, q, p)[0] == length
            assert abs(length - distance(config, p2, q)[0]) <= circle_distance(p, p2) + 1e-9
            extra = Shortcut.chord(rng.uniform(0, TWO_PI), rng.uniform(0.05, 2.0))
            assert distance(config.with_shortcut(extra), p, q)[0] <= length + 1e-9
            assert witness_violations(config, p, q, length, witness) == []


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
