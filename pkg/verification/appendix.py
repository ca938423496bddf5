"""
Recomputation of every printed value and inequality of the calculations appendix.

Each block function returns the CheckLines of one appendix block in print order.
Printed values are only ever used as `expected`; inequalities are decided on
recomputed numbers.
"""

import logging
import math

import config
from geometry.utils.calculations import MAX_DETOUR, detour_gain, inverse_detour
from synthesis.solvers import solve_k_star
from verification.checks import BlockBuilder

log = logging.getLogger(__name__)

PI = math.pi
TWO_PI = 2 * math.pi

# Keys follow the order of the printed appendix; headings number them from 1.
BLOCK_TITLES = {
    'nested-detour': 'Detour gain of the detour gain',
    'k-star-table': 'Optimal chord lengths and detour gains, k = 2..6',
    'three-shortcut-bounds': 'Bounds used for three shortcuts',
    'pair-roots-table': 'Combinable shortcut lengths, k = 4..6',
    'single-long-shortcut': 'At most one long shortcut per antipodal path, k = 4..6',
    'reduced-strip-contradiction': 'Final contradiction, k = 4..6: the reduced strip is not covered',
    'midline-width': 'Midline widths of shortcuts reaching the midline, k = 3..5',
    'six-shortcut-bound': 'Six shortcuts',
    'seven-reduced-strips': 'Seven shortcuts: reduced strips',
    'seven-long-widths': 'Seven shortcuts: widths of long shortcuts',
    'seven-area': 'Seven shortcuts: area argument',
    'isolated-points': 'Seven shortcuts: isolated boundary points',
    'short-shortcut-contradiction': 'Final contradiction, seven shortcuts: a short shortcut exists',
    'short-pair-detour': 'Seven shortcuts: two short shortcuts',
    'no-short-shortcut-contradiction': 'Final contradiction, seven shortcuts: no short shortcut',
}

d = detour_gain


def _nested_detour():
    b = BlockBuilder('nested-detour')
    b.value('delta(delta(2))', d(d(2.0)), 0.00402)
    return b.lines


def _k_star_table():
    printed = {
        2: (1.4782, 0.0926, 3.0490, 1.2219),
        3: (1.8435, 0.2509, 2.8907, 1.5943),
        4: (1.9619, 0.3943, 2.7473, 1.7623),
        5: (1.9969, 0.5164, 2.6252, 1.8526),
        6: (2.0000, 0.5708, 2.5708, 1.8828),
    }
    b = BlockBuilder('k-star-table')
    for k, (a_star, dstar, diameter, mu) in printed.items():
        sol = solve_k_star(k)
        b.value(f'k={k}: a*', sol.a_star, a_star, terms=(
            b.term('d*', sol.dstar, dstar),
            b.term('pi - d*', sol.diameter, diameter),
            b.term('mu', sol.mu, mu),
        ))
    return b.lines


def _three_shortcut_bounds():
    sol = solve_k_star(3)
    b = BlockBuilder('three-shortcut-bounds')
    b.value('(pi - d*)/2', (PI - sol.dstar) / 2, 1.4454)
    b.value('delta(1.45)', d(1.45), 0.0860)
    b.value('delta(pi/2)', d(PI / 2), 0.1179)
    b.value('a such that delta(a) = 0.06', inverse_detour(0.06), 1.3150)
    return b.lines


def _pair_roots_table():
    printed = {
        4: (1.9619, 0.3943, 1.7623, 1.0373, 1.7100),
        5: (1.9969, 0.5164, 1.8526, 0.7862, 1.8390),
        6: (2.0000, 0.5708, 1.8828, 0.6957, 1.8751),
    }
    b = BlockBuilder('pair-roots-table')
    for k, (a_star, dstar, mu, sigma, lam) in printed.items():
        sol = solve_k_star(k)
        b.value(f'k={k}: sigma', sol.sigma, sigma, terms=(
            b.term('a*', sol.a_star, a_star),
            b.term('d*', sol.dstar, dstar),
            b.term('mu', sol.mu, mu),
            b.term('lambda', sol.lam, lam),
        ))
    return b.lines


def _reduced_dstar(sol, count):
    """δ* lowered by the gain of `count` shortcuts no longer than σ, used twice each."""
    return sol.dstar - 2 * count * d(sol.sigma)


def _single_long_shortcut():
    printed = {4: (0.3411, 1.0906, 2.1811), 5: (0.4728, 0.8298, 2.4894), 6: (0.5262, 0.7403, 2.9610)}
    b = BlockBuilder('single-long-shortcut')
    for k, (reduced, width, total) in printed.items():
        sol = solve_k_star(k)
        d_hat = _reduced_dstar(sol, k - 3)
        w = PI - sol.lam - d_hat
        b.inequality(f'k={k}: (k-2) w', (k - 2) * w, '<', PI, expected=total, terms=(
            b.term('delta^', d_hat, reduced),
            b.term('w = pi - lambda - d^', w, width),
        ))
    return b.lines


def _reduced_strip_contradiction():
    printed = {
        4: (0.3411, 1.9304, 0.8701, 2.6103),
        5: (0.4728, 1.9893, 0.6795, 2.7178),
        6: (0.5262, 1.9979, 0.6174, 3.0872),
    }
    b = BlockBuilder('reduced-strip-contradiction')
    for k, (reduced, chord, width, total) in printed.items():
        sol = solve_k_star(k)
        d_hat = _reduced_dstar(sol, k - 3)
        a_hat = inverse_detour(d_hat)
        w = PI - a_hat - d_hat
        b.inequality(f'k={k}: (k-1) w', (k - 1) * w, '<', PI, expected=total, terms=(
            b.term('delta^', d_hat, reduced),
            b.term('a^', a_hat, chord),
            b.term('w = pi - a^ - delta^', w, width),
        ))
    return b.lines


def _midline_width():
    printed = {3: (1.5943, 1.2964, 2.5928), 4: (1.7623, 0.9850, 2.9549), 5: (1.8526, 0.7726, 3.0902)}
    b = BlockBuilder('midline-width')
    for k, (mu, width, total) in printed.items():
        sol = solve_k_star(k)
        w = PI - sol.mu - sol.dstar
        b.inequality(f'k={k}: (k-1) w', (k - 1) * w, '<', PI, expected=total, terms=(
            b.term('mu', sol.mu, mu),
            b.term('w = pi - mu - d*', w, width),
        ))
    return b.lines


def _six_shortcut_bound():
    sol = solve_k_star(6)
    w = PI - sol.mu - sol.dstar
    b = BlockBuilder('six-shortcut-bound')
    b.inequality('4 w', 4 * w, '<', PI, expected=2.7518, terms=(
        b.term('mu', sol.mu, 1.8828),
        b.term('d*', sol.dstar, 0.5708),
        b.term('w = pi - mu - d*', w, 0.6880),
    ))
    b.inequality('pi - d* + 5 w', PI - sol.dstar + 5 * w, '<', TWO_PI, expected=6.0106)
    b.inequality('delta(pi - d* - mu)', d(w), '<', 0.008, expected=0.0072)
    d_hat = sol.dstar - 0.016
    a_hat = inverse_detour(d_hat)
    b.inequality('5 (pi - a^ - d^)', 5 * (PI - a_hat - d_hat), '<', PI, expected=2.9353, terms=(
        b.term('d^ = d* - 0.016', d_hat, 0.5548),
        b.term('a^', a_hat, 1.9997),
    ))
    return b.lines


def _seven_reduced_strips():
    sol = solve_k_star(6)
    gain = d(sol.sigma)

    def d_hat(count):
        return sol.dstar - 2 * count * gain

    b = BlockBuilder('seven-reduced-strips')
    b.value('delta(sigma6)', gain, 0.0074, terms=(b.term('sigma6', sol.sigma, 0.6957),))
    w = PI - 1.849 - d_hat(4)
    b.inequality('4 * (pi - 1.849 - d^(4))', 4 * w, '<', PI, expected=3.1248, terms=(
        b.term('d^(4)', d_hat(4), 0.5114),
        b.term('2 delta(1.849)', 2 * d(1.849), 0.5104),
        b.term('w', w, 0.7812),
    ))
    five = solve_k_star(5).dstar
    b.inequality('d^(2)', d_hat(2), '>', five, expected=0.5411,
                 terms=(b.term('d5*', five, 0.5164),))
    w = PI - sol.lam - d_hat(1)
    b.inequality('4 * (pi - lambda6 - d^(1))', 4 * w, '<', PI, expected=2.8422, terms=(
        b.term('d^(1)', d_hat(1), 0.5559),
        b.term('w', w, 0.7105),
    ))
    return b.lines


def _seven_long_widths():
    lam6 = solve_k_star(6).lam
    w1 = PI - 1.999 - 0.54
    w2 = PI - lam6 - 0.54
    w3 = PI - 1.7 - 0.54
    b = BlockBuilder('seven-long-widths')
    b.inequality('1.7 + lambda6', 1.7 + lam6, '>', PI, expected=3.5751)
    b.inequality('delta(1.999)', d(1.999), '<', 0.54, expected=0.5397)
    b.value('w1 = pi - 1.999 - 0.54', w1, 0.6026)
    b.value('w2 = pi - lambda6 - 0.54', w2, 0.7265)
    b.value('w3 = pi - 1.7 - 0.54', w3, 0.9016)
    b.inequality('w3 + 2 * w2 + 6 * w1', w3 + 2 * w2 + 6 * w1, '<', TWO_PI, expected=5.9701)
    b.inequality('2 * w2 + 8 * w1', 2 * w2 + 8 * w1, '<', TWO_PI, expected=6.2737)
    return b.lines


def _seven_area():
    sol = solve_k_star(6)
    lam6 = sol.lam
    d_hat = MAX_DETOUR - 2 * d(sol.sigma)
    area_long = 4 * d(lam6) * (PI - lam6 - d_hat)
    area_third = 4 * d(1.9573) * (PI - 1.9573 - d_hat)
    area_longest = 4 * d_hat * (PI - 1.999 - d_hat)

    b = BlockBuilder('seven-area')
    b.value('d^ = d* - 2 * delta(sigma6)', d_hat, 0.5559)
    b.value('s3 <= 0.8 * pi - d^', 0.8 * PI - d_hat, 1.9573)
    b.value('A(lambda6, d^) = 4 * delta(lambda6) * (pi - lambda6 - d^)', area_long, 0.7900)
    b.value('A(s3, d^) <= 4 * delta(1.9573) * (pi - 1.9573 - d^)', area_third, 0.9681)
    b.inequality('delta(1.999)', d(1.999), '<', d_hat, expected=0.53967)
    b.value('A(1.999, d^) < 4 * d^ * (pi - 1.999 - d^)', area_longest, 1.3046)
    b.inequality('A(lambda6) + A(s3) + 4 * A(1.999)', area_long + area_third + 4 * area_longest,
                 '<', 4 * d_hat * PI, expected=6.9765,
                 terms=(b.term('4 * d^ * pi', 4 * d_hat * PI, 6.9862),))
    return b.lines


def _isolated_points():
    b = BlockBuilder('isolated-points')
    b.value('0.4 - d*/2', 0.4 - MAX_DETOUR / 2, 0.1146,
            terms=(b.term('0.4 + d*/2', 0.4 + MAX_DETOUR / 2, 0.6854),))
    return b.lines


def _short_shortcut_contradiction():
    w = PI - 1.999 - MAX_DETOUR
    b = BlockBuilder('short-shortcut-contradiction')
    b.value('pi - 1.999 - d*', w, 0.5718)
    b.inequality('pi - 2 * 0.4', PI - 0.8, '>', 4 * w, expected=2.3416,
                 terms=(b.term('4 * (pi - 1.999 - d*)', 4 * w, 2.2872),))
    b.inequality('0.4 + d*/2', 0.4 + MAX_DETOUR / 2, '>', w, expected=0.6854)
    return b.lines


def _short_pair_detour():
    sol = solve_k_star(6)
    sigma6, lam6 = sol.sigma, sol.lam
    b = BlockBuilder('short-pair-detour')
    b.inequality('5 * pi - 7 * d* - 5 * lambda6', 5 * PI - 7 * MAX_DETOUR - 5 * lam6, '<', 2.34,
                 expected=2.3369)
    b.inequality('delta(sigma6) + delta(2.34 - sigma6)', d(sigma6) + d(2.34 - sigma6), '<', 0.2,
                 expected=0.1505)
    b.inequality('delta(0.83) + delta(pi/2 + 1 - 0.83)', d(0.83) + d(PI / 2 + 1 - 0.83), '<', 0.2,
                 expected=0.1986)
    b.inequality('delta(0.83) + delta(1.7)', d(0.83) + d(1.7), '<', 0.2, expected=0.1789)
    b.inequality('1.999 + sigma6', 1.999 + sigma6, '>', PI - MAX_DETOUR, expected=2.6947,
                 terms=(b.term('pi - d*', PI - MAX_DETOUR, 2.5708),))
    return b.lines


def _no_short_shortcut_contradiction():
    lam6 = solve_k_star(6).lam
    zeta = PI / 2 - 1.4
    w = PI - 1.949 - MAX_DETOUR
    b = BlockBuilder('no-short-shortcut-contradiction')
    b.value('zeta = pi/2 - 1.4', zeta, 0.1708)
    b.value('pi - lambda6 - d*', PI - lam6 - MAX_DETOUR, 0.6957)
    b.inequality('2 * delta(1.949)', 2 * d(1.949), '<', MAX_DETOUR + zeta, expected=0.7400,
                 terms=(b.term('d* + zeta', MAX_DETOUR + zeta, 0.7416),))
    b.value('pi - 1.949 - d*', w, 0.6218)
    # the printed chain rounds the width up to 0.622
    b.inequality('5 * 2 * 0.622', 5 * 2 * 0.622, '<', TWO_PI, expected=6.2200,
                 terms=(b.term('pi - 1.949 - d*', w, 0.622),))
    return b.lines


BLOCKS = (
    _nested_detour,
    _k_star_table,
    _three_shortcut_bounds,
    _pair_roots_table,
    _single_long_shortcut,
    _reduced_strip_contradiction,
    _midline_width,
    _six_shortcut_bound,
    _seven_reduced_strips,
    _seven_long_widths,
    _seven_area,
    _isolated_points,
    _short_shortcut_contradiction,
    _short_pair_detour,
    _no_short_shortcut_contradiction,
)


def appendix_report():
    """All appendix CheckLines, in print order."""
    lines = [line for block in BLOCKS for line in block()]
    failed = sum(not line.passed for line in lines)
    log.info("appendix: %d lines, %d failed", len(lines), failed)
    if len(lines) != config.APPENDIX_LINE_COUNT:
        log.warning("appendix has %d lines, expected %d", len(lines), config.APPENDIX_LINE_COUNT)
    return lines
