"""
Angle parsing for command-line arguments.

Accepts decimal radians ("1.5708") and multiples of π ("pi", "-pi", "0.5pi", "0.75*pi").
"""

import math
import re

import click

from geometry.errors import DomainError

_PI_MULTIPLE = re.compile(r'^([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi$')


def parse_angle(text):
    """Radians from a decimal or a multiple of π."""
    value = str(text).strip().lower().replace('π', 'pi')
    match = _PI_MULTIPLE.match(value)
    if match:
        factor = match.group(1)
        if factor in ('', '+'):
            return math.pi
        if factor == '-':
            return -math.pi
        return float(factor) * math.pi
    try:
        result = float(value)
    except ValueError:
        raise DomainError(f"cannot read {text!r} as an angle") from None
    if not math.isfinite(result):
        raise DomainError(f"angle must be finite, got {text!r}")
    return result


class AngleType(click.ParamType):
    name = 'angle'

    def convert(self, value, param, ctx):
        if isinstance(value, float):
            return value
        try:
            return parse_angle(value)
        except DomainError as exc:
            self.fail(str(exc), param, ctx)


ANGLE = AngleType()
