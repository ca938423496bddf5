"""
Synthesis commands: characteristic constants and configuration documents.
"""

import click

from cli.output import banner, num, row
from geometry.documents import dumps, save_config
from geometry.errors import DomainError
from synthesis.constructions import asymptotic_config, eight_config, six_config, uniform_config
from synthesis.solvers import solve_eight, solve_k_star

MAKE_TARGETS = ('2', '3', '4', '5', '6', '8', 'asym')


@click.command()
@click.argument('k', type=click.IntRange(min=2))
def solve(k):
    """Print the optimal constants for K shortcuts (K = 8: the eight-shortcut construction)."""
    if k == 8:
        solution = solve_eight()
        banner("EIGHT SHORTCUTS")
        row('a1', solution.a1)
        row('a2', solution.a2)
        row('d*', solution.dstar)
        row('pi - d*', solution.diameter)
        return

    solution = solve_k_star(k)
    banner(f"k = {k}")
    row('a*', solution.a_star)
    row('d*', solution.dstar)
    row('pi - d*', solution.diameter)
    row('mu', solution.mu)
    row('sigma', solution.sigma)
    row('lambda', solution.lam)


def build_config(target, m=None):
    """Configuration (and asymptotic report, if any) for a `make` target."""
    if target == 'asym':
        if m is None:
            raise DomainError("'make asym' needs the parameter m")
        return asymptotic_config(m)
    if m is not None:
        raise DomainError(f"'make {target}' takes no extra parameter")
    k = int(target)
    if k == 6:
        return six_config(), None
    if k == 8:
        return eight_config(), None
    return uniform_config(k), None


@click.command()
@click.argument('target', type=click.Choice(MAKE_TARGETS))
@click.argument('m', type=click.IntRange(min=1), required=False)
@click.option('-o', '--output', type=click.Path(dir_okay=False, writable=True),
              help='Write the document here instead of stdout.')
def make(target, m, output):
    """Build the configuration for TARGET (k = 2..6, 8, or 'asym M')."""
    shortcuts, report = build_config(target, m)

    if output is None:
        click.echo(dumps(shortcuts))
        if report is not None:
            click.echo(f"asymptotic m={report.m}: {report.family_one} + {report.family_two}"
                       f" = {report.total} shortcuts", err=True)
        return

    save_config(shortcuts, output)
    banner(f"{shortcuts.label.upper()}: {len(shortcuts)} SHORTCUTS")
    click.echo(f"✓ written to {output}")
    if report is not None:
        row('points', report.points)
        row('family 1', report.family_one)
        row('family 2', report.family_two)
        row('bound', num(report.family_two_bound))
        for t, count in report.per_t:
            click.echo(f"     t = {t:<4} {count}")
