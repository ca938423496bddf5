"""
CheckLine: one recomputed value or inequality with its verdict.

A line passes when its computed value is within tolerance of the printed value
(if one is given), the stated strict inequality holds on the recomputed
numbers (if one is given), and every supporting term passes.
"""

import math
import operator
from dataclasses import dataclass
from typing import Optional

import config
from geometry.errors import DomainError

RELATIONS = {
    '<': operator.lt,
    '>': operator.gt,
    '<=': operator.le,
    '>=': operator.ge,
}


@dataclass(frozen=True)
class Term:
    """An intermediate value printed on the same line."""
    label: str
    computed: float
    expected: float
    tolerance: float

    @property
    def passed(self):
        return math.isfinite(self.computed) and abs(self.computed - self.expected) <= self.tolerance

    def to_dict(self):
        return {'label': self.label, 'computed': self.computed, 'expected': self.expected,
                'tolerance': self.tolerance, 'passed': self.passed}


@dataclass(frozen=True)
class CheckLine:
    id: str
    block: str
    expression: str
    computed: float
    expected: Optional[float] = None
    relation: Optional[str] = None
    bound: Optional[float] = None
    tolerance: float = 0.0
    terms: tuple = ()

    def __post_init__(self):
        if self.relation is not None and self.relation not in RELATIONS:
            raise DomainError(f"unknown relation {self.relation!r}")
        if (self.relation is None) != (self.bound is None):
            raise DomainError("relation and bound go together")

    @property
    def margin(self):
        """Signed slack of the inequality (positive when it holds), or None."""
        if self.relation is None:
            return None
        if self.relation in ('<', '<='):
            return self.bound - self.computed
        return self.computed - self.bound

    @property
    def passed(self):
        if not math.isfinite(self.computed):
            return False
        if self.expected is not None and abs(self.computed - self.expected) > self.tolerance:
            return False
        if self.relation is not None and not RELATIONS[self.relation](self.computed, self.bound):
            return False
        return all(term.passed for term in self.terms)

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'

    def to_dict(self):
        return {
            'id': self.id,
            'block': self.block,
            'expression': self.expression,
            'computed': self.computed,
            'expected': self.expected,
            'relation': self.relation,
            'bound': self.bound,
            'tolerance': self.tolerance,
            'terms': [term.to_dict() for term in self.terms],
            'verdict': self.verdict,
        }


class BlockBuilder:
    """Numbers the lines of one report block."""

    def __init__(self, block, tolerance=None):
        self.block = block
        self.tolerance = config.APPENDIX_TOL if tolerance is None else tolerance
        self.lines = []

    def term(self, label, computed, expected):
        return Term(label, float(computed), float(expected), self.tolerance)

    def value(self, expression, computed, expected=None, relation=None, bound=None, terms=()):
        """Add a line; returns it."""
        line = CheckLine(
            id=f'{self.block}/{len(self.lines) + 1}',
            block=self.block,
            expression=expression,
            computed=float(computed),
            expected=None if expected is None else float(expected),
            relation=relation,
            bound=None if bound is None else float(bound),
            tolerance=self.tolerance,
            terms=tuple(terms),
        )
        self.lines.append(line)
        return line

    def inequality(self, expression, computed, relation, bound, expected=None, terms=()):
        return self.value(expression, computed, expected, relation, bound, terms)


def all_passed(lines):
    return all(line.passed for line in lines)
