"""
Generators for concrete shortcut configurations.

Every construction fixes its rotation by the left edge of each shortcut's
top-anchored region rectangle, so repeated runs produce identical endpoints.
"""

import logging
import math
from dataclasses import dataclass

import config
from geometry.errors import DomainError, NumericError
from geometry.models import Configuration, Shortcut
from geometry.strip import config_rectangles, covers
from geometry.utils.calculations import MAX_DETOUR
from synthesis.solvers import solve_eight, solve_k_star

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AsymptoticReport:
    m: int
    points: int
    family_one: int
    family_two: int
    per_t: tuple
    family_two_bound: float

    @property
    def total(self):
        return self.family_one + self.family_two

    def to_dict(self):
        return {
            'm': self.m, 'points': self.points, 'family_one': self.family_one,
            'family_two': self.family_two, 'total': self.total,
            'family_two_bound': self.family_two_bound,
            'per_t': {str(t): count for t, count in self.per_t},
        }


def placed_shortcut(a, dstar, left_edge):
    """Shortcut of length a whose top-anchored rectangle in the δ*-strip starts at `left_edge`."""
    return Shortcut.chord(left_edge - (a / 2 + dstar / 2), a)


def uniform_config(k):
    """k equal shortcuts of length a*_k whose regions tile the δ*_k-strip."""
    if k not in (2, 3, 4, 5):
        raise DomainError(f"uniform construction exists for k in 2..5, got {k!r}")
    solution = solve_k_star(k)
    shortcuts = [placed_shortcut(solution.a_star, solution.dstar, j * math.pi / k)
                 for j in range(k)]
    return Configuration(tuple(shortcuts), f'uniform k={k}',
                         {'construction': 'uniform', 'k': k, 'target_dstar': solution.dstar})


def six_config():
    """Six diameters rotated by multiples of π/6."""
    shortcuts = [Shortcut(j * math.pi / 6 - math.pi / 2, j * math.pi / 6 + math.pi / 2)
                 for j in range(6)]
    return Configuration(tuple(shortcuts), 'six diameters',
                         {'construction': 'six', 'k': 6, 'target_dstar': MAX_DETOUR})


def eight_config():
    """
    Two short and six long shortcuts covering the strip for the eight-shortcut δ*.

    The short shortcuts' top rectangles cover the top band over θ ∈ [0, π] and
    their mirrors the bottom band over [π, 2π]; the long shortcuts' top-anchored
    rectangles stand in a row from θ = π and their mirrors from θ = 0.
    """
    solution = solve_eight()
    provenance = {'construction': 'eight', 'k': 8, 'target_dstar': solution.dstar}
    overlap = (math.pi - solution.a1 - solution.dstar) - math.pi / 6

    for attempt in range(config.EIGHT_PHASE_SAMPLES):
        offset = overlap * attempt / config.EIGHT_PHASE_SAMPLES
        shortcuts = [placed_shortcut(solution.a2, solution.dstar, 0.0),
                     placed_shortcut(solution.a2, solution.dstar, math.pi / 2)]
        shortcuts += [placed_shortcut(solution.a1, solution.dstar, math.pi + j * math.pi / 6 - offset)
                      for j in range(6)]
        candidate = Configuration(tuple(shortcuts), 'eight shortcuts', provenance)
        result = covers(config_rectangles(candidate, solution.dstar), dstar=solution.dstar)
        if result.covered:
            if attempt:
                log.info("eight placement covered after shifting long columns by %.3g", offset)
            return candidate
        log.debug("eight placement attempt %d leaves gap %s", attempt, result.gap)
    raise NumericError("no eight-shortcut placement covers the strip")


def _family_two_counts(m):
    """(t, ⌈2π/Δ_t⌉) for every integer t with 4√m < t < 2m."""
    counts = []
    for t in range(math.floor(4 * math.sqrt(m)) + 1, 2 * m):
        spacing = (t / m) ** 2 / 12
        counts.append((t, math.ceil(2 * math.pi / spacing)))
    return counts


def _check_m(m):
    if isinstance(m, bool) or not isinstance(m, int) or m < config.ASYMPTOTIC_MIN_M:
        raise DomainError(f"m must be an integer ≥ {config.ASYMPTOTIC_MIN_M}, got {m!r}")


def asymptotic_report(m):
    """Shortcut counts of the asymptotic family, without building it."""
    _check_m(m)
    points = math.ceil(4 * math.pi * m)
    threshold = math.pi - 4 / math.sqrt(m)
    # pairs i < j with j − i = d number points − d
    family_one = sum(points - d for d in range(1, points)
                     if 2 * math.pi * min(d, points - d) / points > threshold)
    per_t = _family_two_counts(m)
    return AsymptoticReport(m, points, family_one, sum(c for _, c in per_t), tuple(per_t),
                            6 * math.pi * m ** 1.5)


def asymptotic_config(m):
    """
    Shortcut family whose diameter is at most 2 + 1/m.

    Family 1 joins every pair of ⌈4πm⌉ equally spaced points whose angle exceeds
    π − 4/√m. Family 2 adds, for each integer t with 4√m < t < 2m, ⌈2π/Δ⌉ equally
    spaced shortcuts with arc π − t/m, where Δ = (t/m)²/12.

    Returns:
        tuple: (Configuration, AsymptoticReport)
    """
    report = asymptotic_report(m)
    threshold = math.pi - 4 / math.sqrt(m)
    points = report.points
    angles = [2 * math.pi * i / points for i in range(points)]
    shortcuts = []
    for i in range(points):
        for j in range(i + 1, points):
            steps = min(j - i, points - (j - i))
            if 2 * math.pi * steps / points > threshold:
                shortcuts.append(Shortcut.from_endpoints(angles[i], angles[j]))

    for t, count in report.per_t:
        arc = math.pi - t / m
        shortcuts.extend(Shortcut(2 * math.pi * i / count, 2 * math.pi * i / count + arc)
                         for i in range(count))

    if len(shortcuts) != report.total:
        raise NumericError(f"asymptotic m={m}: built {len(shortcuts)} shortcuts, expected {report.total}")
    log.info("asymptotic m=%d: %d + %d shortcuts", m, report.family_one, report.family_two)
    family = Configuration(tuple(shortcuts), f'asymptotic m={m}',
                           {'construction': 'asymptotic', 'm': m, 'target_diameter': 2 + 1 / m})
    return family, report
