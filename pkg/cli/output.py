"""Shared click.echo helpers: banners, number formatting and verdict marks."""

import click

import config


def num(value):
    if value is None:
        return 'n/a'
    return format(value, config.NUMBER_FORMAT)


def mark(ok):
    return '✓' if ok else '✗'


def banner(title):
    click.echo("=" * 60)
    click.echo(title)
    click.echo("=" * 60)


def row(label, value, width=12):
    click.echo(f"   {label:<{width}} {num(value) if not isinstance(value, str) else value}")


def echo_witness(witness):
    """One line per leg of a shortest-path witness."""
    for leg in witness.legs:
        if leg.kind == 'shortcut':
            click.echo(f"   shortcut #{leg.index}  {num(leg.entry)} -> {num(leg.exit)}"
                       f"  length {num(leg.length)}")
        else:
            direction = 'ccw' if leg.ccw else 'cw'
            click.echo(f"   arc {direction:<3}       {num(leg.start)} -> {num(leg.end)}"
                       f"  length {num(leg.length)}")
