"""
Standalone numeric facts used by the optimality and construction arguments.

- check_area_lemma: the region area A(·, δ*) rises up to a* and falls after it
- check_asymptotic_inequalities: chord estimates behind the 2 + 1/m family
- check_eight_constants: the eight-shortcut solution against its ten-digit values
- perturbation_spot_check: random perturbations of the k-shortcut optimum never beat it
"""

import logging
import math

import numpy as np

import config
from geometry.errors import DomainError
from geometry.metric import diameter_bounds
from geometry.models import Configuration, Shortcut
from geometry.strip import region_area
from geometry.utils.calculations import MAX_DETOUR, inverse_detour
from synthesis.constructions import asymptotic_report, uniform_config
from synthesis.solvers import solve_eight
from verification.checks import BlockBuilder

log = logging.getLogger(__name__)


def _area_h(x):
    return x ** 2 + 1.2 * x - 2 + 2 * (1 - x ** 2) ** 1.5


def _area_g(x):
    return (1.2 - x) / np.sqrt(1 - x ** 2) + 2 * x - 1.2 - np.arcsin(x)


def check_area_lemma():
    """g > 0 on (0, 1) via h(1/2) > 0 and g(0) = 0, plus a grid check of A's monotonicity."""
    b = BlockBuilder('area-lemma', tolerance=config.PRECISE_TOL)
    b.inequality('h(1/2)', _area_h(0.5), '>', 0.0, expected=0.149038)
    b.value('g(0)', _area_g(0.0), 0.0)

    n = config.AREA_GRID_POINTS
    grid = np.arange(1, n + 1) / (n + 1)
    b.inequality(f'min g(x) over {n} points of (0, 1)', float(np.min(_area_g(grid))), '>', 0.0)

    for dstar in config.AREA_SAMPLE_DSTARS:
        peak = inverse_detour(min(dstar, MAX_DETOUR))
        rising = np.linspace(0.0, peak, config.MONOTONE_GRID_POINTS)
        falling = np.linspace(peak, 2.0, config.MONOTONE_GRID_POINTS)
        steps = [np.diff(region_area(rising, dstar))]
        if peak < 2.0:
            steps.append(-np.diff(region_area(falling, dstar)))
        worst = float(min(np.min(s) for s in steps))
        b.inequality(f'A(a, {dstar}) monotone on both sides of a*', worst, '>', 0.0)
    return b.lines


def check_asymptotic_inequalities(m):
    """
    Chord estimates for the asymptotic family at a given m.

    Each chain is one line whose computed value is the worst case over its range of t.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < config.ASYMPTOTIC_MIN_M:
        raise DomainError(f"m must be an integer ≥ {config.ASYMPTOTIC_MIN_M}, got {m!r}")
    b = BlockBuilder(f'asymptotic-m{m}', tolerance=0.0)
    b.inequality('2 sin(1/m)', 2 * math.sin(1 / m), '>', 5 / (3 * m))

    near = np.arange(0, math.isqrt(m) - 1)
    if near.size:
        worst = float(np.min(2 * np.cos((near + 2) / (2 * m))))
        b.inequality(f'2 cos((t+2)/(2m)), t = 0..{near[-1]}', worst, '>=', 2 - 1 / (4 * m))

    far = np.arange(math.floor(4 * math.sqrt(m)) + 1, 2 * m)
    if far.size:
        worst = float(np.max(2 * np.cos(far / (2 * m)) + (far / m) ** 2 / 6))
        b.inequality(f'2 cos(t/(2m)) + (t/m)^2/6, t = {far[0]}..{far[-1]}', worst, '<=', 2.0)

    report = asymptotic_report(m)
    b.inequality('family-2 shortcut count', report.family_two, '<=', report.family_two_bound)
    return b.lines


def check_eight_constants():
    """The eight-shortcut root against its published ten-digit values."""
    solution = solve_eight()
    b = BlockBuilder('eight-shortcut', tolerance=config.PRECISE_TOL)
    b.value('d*', solution.dstar, 0.5822245291)
    b.value('a1', solution.a1, 1.999870869)
    b.value('a2', solution.a2, 0.988571799)
    b.inequality('pi - a1 - d*', math.pi - solution.a1 - solution.dstar, '>', math.pi / 6)
    b.inequality('pi - d*', solution.diameter, '<', math.pi / 2 + 1, expected=2.559368125)
    return b.lines


def perturbed_config(base, rng, magnitude):
    """Rotate and resize every shortcut of `base` by uniform amounts up to `magnitude`."""
    shortcuts = []
    for s in base:
        turn, stretch = rng.uniform(-magnitude, magnitude, size=2)
        length = min(max(s.length + stretch, 1e-6), 2.0)
        shortcuts.append(Shortcut.chord(s.center + turn, length))
    return Configuration(tuple(shortcuts), f'{base.label} perturbed',
                         {'construction': 'perturbed', 'base': base.label})


def perturbation_spot_check(k, trials=None, magnitude=None, h=None, seed=0):
    """
    Certify random perturbations of uniform_config(k).

    The certified upper bound must never fall below π − δ*_k − slack.
    """
    trials = config.PERTURBATION_TRIALS if trials is None else trials
    magnitude = config.PERTURBATION_MAGNITUDE if magnitude is None else magnitude
    h = config.PERTURBATION_STEP if h is None else h
    base = uniform_config(k)
    target = math.pi - base.target_dstar
    rng = np.random.default_rng(seed)

    lowest = math.inf
    for trial in range(trials):
        bound = diameter_bounds(perturbed_config(base, rng, magnitude), h)
        lowest = min(lowest, bound.hi)
        log.debug("k=%d trial %d: hi=%.6f", k, trial, bound.hi)

    b = BlockBuilder(f'perturbation-k{k}', tolerance=0.0)
    b.inequality(f'min certified upper bound over {trials} perturbations', lowest, '>=',
                 target - config.PERTURBATION_SLACK)
    return b.lines
