"""
Metric commands: distances, certified diameters and strip cover checks.
"""

import click

import config
from cli.output import banner, echo_witness, mark, num, row
from cli.parsing import ANGLE
from geometry.documents import load_config
from geometry.metric import diameter_bounds, distance
from geometry.strip import config_rectangles, covers

CONFIG_FILE = click.Path(exists=True, dir_okay=False)


@click.command()
@click.argument('file', type=CONFIG_FILE)
@click.option('--step', type=click.FloatRange(min=0, min_open=True), default=None,
              help=f'Grid step h (default {config.DEFAULT_STEP}).')
@click.option('--jobs', type=click.IntRange(min=1), default=None,
              help=f'Worker threads for the grid (default {config.N_JOBS}).')
def diam(file, step, jobs):
    """Certified bounds [lo, hi] on the diameter of the configuration in FILE."""
    shortcuts = load_config(file)
    bound = diameter_bounds(shortcuts, h=step, n_jobs=jobs)
    banner(f"DIAMETER: {shortcuts.label or file}")
    row('lo', bound.lo)
    row('hi', bound.hi)
    row('step', bound.step)
    row('p', bound.p)
    row('q', bound.q)
    click.echo("   witness:")
    echo_witness(bound.path)


@click.command()
@click.argument('file', type=CONFIG_FILE)
@click.argument('p', type=ANGLE)
@click.argument('q', type=ANGLE)
def dist(file, p, q):
    """Shortest-path distance between angles P and Q."""
    shortcuts = load_config(file)
    length, witness = distance(shortcuts, p, q)
    banner(f"DISTANCE {num(p)} -> {num(q)}")
    row('length', length)
    echo_witness(witness)


@click.command()
@click.argument('file', type=CONFIG_FILE)
@click.argument('dstar', type=float)
def cover(file, dstar):
    """Check whether the regions of FILE's shortcuts cover the strip of half-height DSTAR."""
    shortcuts = load_config(file)
    result = covers(config_rectangles(shortcuts, dstar), dstar=dstar)
    banner(f"STRIP COVER AT d* = {num(dstar)}")
    if result.covered:
        click.echo(f"{mark(True)} covered")
        return
    lo, hi, xi = result.gap
    click.echo(f"{mark(False)} gap at xi = {num(xi)}, theta in [{num(lo)}, {num(hi)}]")
    raise SystemExit(1)
