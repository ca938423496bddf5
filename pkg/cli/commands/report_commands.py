"""
Report commands: appendix verification and SVG diagrams.
"""

import click

import config
from geometry.documents import load_config
from render.diagrams import render_circle, render_strip
from verification.appendix import appendix_report
from verification.checks import all_passed
from verification.inequalities import (
    check_area_lemma, check_asymptotic_inequalities, check_eight_constants,
    perturbation_spot_check,
)
from verification.report import format_report, report_json


@click.command()
@click.option('--json', 'as_json', is_flag=True, help='Print the JSON array of check records.')
@click.option('--all', 'everything', is_flag=True,
              help='Also run the area, eight-shortcut, asymptotic and perturbation checks.')
def verify(as_json, everything):
    """Recompute the calculations appendix; exit 0 iff every line passes."""
    lines = appendix_report()
    if everything:
        lines += check_area_lemma()
        lines += check_eight_constants()
        for m in config.GROWTH_SAMPLE_M:
            lines += check_asymptotic_inequalities(m)
        for k in config.PERTURBATION_K:
            lines += perturbation_spot_check(k)

    click.echo(report_json(lines) if as_json else format_report(lines), nl=as_json)
    if not all_passed(lines):
        raise SystemExit(1)


@click.command()
@click.argument('kind', type=click.Choice(['circle', 'strip']))
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('-o', '--output', type=click.Path(dir_okay=False, writable=True),
              help='SVG file to write (default: stdout).')
@click.option('--dstar', type=float, default=None,
              help="Strip half-height (default: the configuration's target).")
@click.option('--umbra', is_flag=True, help='Draw umbra arcs on the circle diagram.')
def render(kind, file, output, dstar, umbra):
    """Draw the configuration in FILE as a circle or strip diagram."""
    shortcuts = load_config(file)
    scene = render_circle(shortcuts, show_umbra=umbra) if kind == 'circle' \
        else render_strip(shortcuts, dstar)
    if output is None:
        click.echo(scene.to_svg(), nl=False)
        return
    scene.save(output)
    click.echo(f"✓ {kind} diagram written to {output}")
