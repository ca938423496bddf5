"""
Circle Shortcut Toolkit: command-line entry point.

Registers every command group and configures logging from -v flags.

    python cli/app.py solve 3
    python cli/app.py make 6 -o six.json && python cli/app.py diam six.json
"""

import sys
import os

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import logging

import click

from geometry.errors import ShortcutToolError

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


class ShortcutCLI(click.Group):
    """Group that turns project errors into a message on stderr and exit status 1."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (ShortcutToolError, OSError) as exc:
            click.echo(f"Error: {exc}", err=True)
            ctx.exit(1)


def create_cli():
    """Application factory: builds the click group with all commands attached."""

    @click.group(cls=ShortcutCLI)
    @click.option('-v', '--verbose', count=True, help='-v for progress, -vv for debug output.')
    def cli(verbose):
        """Shortcuts on the unit circle: solve, build, certify, verify and draw."""
        logging.basicConfig(
            level=LOG_LEVELS.get(verbose, logging.DEBUG),
            format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        )

    # ─── Register Commands ──────────────────────────────────────
    from cli.commands.synthesis_commands import make, solve
    from cli.commands.metric_commands import cover, diam, dist
    from cli.commands.report_commands import render, verify

    for command in (solve, make, diam, dist, cover, verify, render):
        cli.add_command(command)
    return cli


def main():
    create_cli()(prog_name='shortcuts')


if __name__ == '__main__':
    main()
