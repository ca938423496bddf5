"""
Text, DataFrame and JSON renderings of CheckLine lists.

The text report is byte-stable: blocks appear in first-seen order, numbers use
config.NUMBER_FORMAT and nothing time- or host-dependent is printed.
"""

import pandas as pd

import config
from verification.appendix import BLOCK_TITLES

HEADER = 'Calculations appendix: recomputed values'
SCOPE_NOTE = ('Only the arithmetic content is checked; the case analyses and '
              'contradictions of the arguments are not encoded.')
RULE = '=' * 60

COLUMNS = ['id', 'block', 'expression', 'computed', 'expected', 'relation', 'bound',
           'tolerance', 'verdict']


def block_title(block):
    if block in BLOCK_TITLES:
        position = list(BLOCK_TITLES).index(block) + 1
        return f"Appendix block {position}: {BLOCK_TITLES[block]}"
    if block == 'area-lemma':
        return 'Region area monotonicity'
    if block == 'eight-shortcut':
        return 'Eight shortcuts'
    if block.startswith('asymptotic-m'):
        return f"Asymptotic family, m = {block[len('asymptotic-m'):]}"
    if block.startswith('perturbation-k'):
        return f"Perturbed optimum, k = {block[len('perturbation-k'):]}"
    return block


def _num(value):
    return format(value, config.NUMBER_FORMAT)


def _mark(passed):
    return '✓' if passed else '✗'


def format_line(line):
    text = f'{_mark(line.passed)} {line.id:<36} {line.expression} = {_num(line.computed)}'
    if line.expected is not None:
        text += f'  (printed {_num(line.expected)})'
    if line.relation is not None:
        text += f'  {line.relation} {_num(line.bound)}'
    rows = [text]
    for term in line.terms:
        rows.append(f'    {_mark(term.passed)} {term.label} = {_num(term.computed)}'
                    f'  (printed {_num(term.expected)})')
    return '\n'.join(rows)


def format_report(lines, title=HEADER):
    """Plain-text report grouped by block, ending with an 'N/M pass' footer."""
    out = [RULE, title, SCOPE_NOTE, RULE]
    current = None
    for line in lines:
        if line.block != current:
            current = line.block
            heading = block_title(current)
            out += ['', heading, '-' * len(heading)]
        out.append(format_line(line))
    passed = sum(line.passed for line in lines)
    out += ['', RULE, f'{passed}/{len(lines)} pass']
    return '\n'.join(out) + '\n'


def report_frame(lines):
    """One row per CheckLine (terms omitted)."""
    records = [{key: line.to_dict()[key] for key in COLUMNS} for line in lines]
    return pd.DataFrame(records, columns=COLUMNS)


def report_json(lines):
    """JSON array of CheckLine records, terms included."""
    frame = pd.DataFrame([line.to_dict() for line in lines])
    return frame.to_json(orient='records', indent=2, double_precision=15, force_ascii=False)
