"""
Tests for the recomputed calculations appendix and the standalone numeric checks.
"""

import sys
import os
import json

import pytest

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import config
from geometry.errors import DomainError
from verification.appendix import BLOCK_TITLES, BLOCKS, appendix_report
from verification.checks import BlockBuilder, CheckLine, Term, all_passed
from verification.inequalities import (
    check_area_lemma, check_asymptotic_inequalities, check_eight_constants,
    perturbation_spot_check
)
from verification.report import block_title, format_report, report_frame, report_json


@pytest.fixture(scope='module')
def lines():
    return appendix_report()


class TestCheckLine:
    """Tests for CheckLine verdicts."""

    def test_value_within_tolerance(self):
        """A value within tolerance of the printed number passes."""
        line = CheckLine('b/1', 'b', 'x', 1.00004, expected=1.0, tolerance=5e-4)
        assert line.passed
        assert line.verdict == 'pass'
        assert line.margin is None

    def test_value_outside_tolerance(self):
        """A value further than the tolerance from the printed number fails."""
        assert not CheckLine('b/1', 'b', 'x', 1.001, expected=1.0, tolerance=5e-4).passed

    def test_inequality_decided_on_computed_value(self):
        """Inequalities use the computed value, not the printed one."""
        line = CheckLine('b/1', 'b', 'x', 0.9999, expected=1.0, relation='<', bound=0.99995,
                         tolerance=5e-4)
        assert line.passed
        assert line.margin == pytest.approx(5e-5)
        assert not CheckLine('b/1', 'b', 'x', 1.0, relation='<', bound=1.0).passed
        assert CheckLine('b/1', 'b', 'x', 1.0, relation='<=', bound=1.0).passed

    def test_failing_term_fails_line(self):
        """One failing intermediate term fails the whole line."""
        term = Term('t', 2.0, 1.0, 5e-4)
        assert not CheckLine('b/1', 'b', 'x', 1.0, expected=1.0, terms=(term,)).passed

    def test_nan_fails(self):
        """NaN never satisfies a relation."""
        assert not CheckLine('b/1', 'b', 'x', float('nan'), relation='>', bound=0.0).passed

    def test_relation_needs_bound(self):
        """A relation without a bound, or an unknown relation, is rejected."""
        with pytest.raises(DomainError):
            CheckLine('b/1', 'b', 'x', 1.0, relation='<')
        with pytest.raises(DomainError):
            CheckLine('b/1', 'b', 'x', 1.0, relation='!=', bound=1.0)

    def test_builder_numbers_lines(self):
        """BlockBuilder numbers lines from 1 within the block."""
        b = BlockBuilder('demo')
        b.value('one', 1.0, 1.0)
        b.inequality('two', 2.0, '>', 1.0)
        assert [line.id for line in b.lines] == ['demo/1', 'demo/2']
        assert all(line.tolerance == config.APPENDIX_TOL for line in b.lines)
        assert all_passed(b.lines)


class TestAppendix:
    """Tests for the full appendix recomputation."""

    def test_line_count(self, lines):
        """The appendix has its full count of lines."""
        assert len(lines) == config.APPENDIX_LINE_COUNT

    def test_every_line_passes(self, lines):
        """Every recomputed line agrees with the printed value."""
        failed = [line.id for line in lines if not line.passed]
        assert failed == []

    def test_ids_unique(self, lines):
        """Line ids are unique."""
        assert len({line.id for line in lines}) == len(lines)

    def test_block_order(self, lines):
        """Blocks appear in the order of the printed appendix."""
        blocks = list(dict.fromkeys(line.block for line in lines))
        assert blocks == list(BLOCK_TITLES)
        assert len(blocks) == len(BLOCKS)

    def test_first_line(self, lines):
        """The first line is the nested detour gain."""
        assert lines[0].expression == 'delta(delta(2))'
        assert lines[0].computed == pytest.approx(0.00402, abs=5e-5)

    def test_inequalities_hold_on_recomputed_values(self, lines):
        """Every inequality holds with a non-negative margin."""
        for line in lines:
            if line.relation is not None:
                assert line.margin >= 0, line.id


class TestReport:
    """Tests for the text, DataFrame and JSON renderings."""

    def test_footer(self, lines):
        """The text report ends with the pass count."""
        text = format_report(lines)
        assert text.endswith(f'{len(lines)}/{len(lines)} pass\n')
        assert 'Only the arithmetic content is checked' in text

    def test_block_headings_numbered(self, lines):
        """Appendix headings carry their position in the printed appendix."""
        text = format_report(lines)
        assert 'Appendix block 1: Detour gain of the detour gain' in text
        assert ('Appendix block 15: Final contradiction, seven shortcuts: no short shortcut'
                in text)
        assert block_title('seven-area') == 'Appendix block 11: Seven shortcuts: area argument'
        assert block_title('perturbation-k3') == 'Perturbed optimum, k = 3'

    def test_byte_stable(self, lines):
        """Two runs give identical text."""
        assert format_report(lines) == format_report(appendix_report())

    def test_frame(self, lines):
        """The DataFrame has one row per line and no terms column."""
        frame = report_frame(lines)
        assert frame.shape[0] == len(lines)
        assert 'terms' not in frame.columns
        assert set(frame['verdict']) == {'pass'}

    def test_json(self, lines):
        """JSON records carry ids and terms."""
        records = json.loads(report_json(lines))
        assert len(records) == len(lines)
        assert records[0]['id'] == lines[0].id
        assert 'terms' in records[0]

    def test_failure_marked(self):
        """A failing line is marked with a cross."""
        line = CheckLine('x/1', 'x', 'bad', 1.0, expected=2.0, tolerance=5e-4)
        text = format_report([line])
        assert '✗ x/1' in text
        assert text.endswith('0/1 pass\n')


class TestStandaloneChecks:
    """Tests for the area, asymptotic, eight-shortcut and perturbation checks."""

    def test_area_lemma(self):
        """The region area check passes at every sample."""
        area = check_area_lemma()
        assert all_passed(area)
        assert area[0].computed == pytest.approx(0.149038, abs=5e-5)
        assert len(area) == 3 + len(config.AREA_SAMPLE_DSTARS)

    @pytest.mark.parametrize('m', [4, 16, 25])
    def test_asymptotic(self, m):
        """The asymptotic inequalities hold."""
        assert all_passed(check_asymptotic_inequalities(m))

    def test_asymptotic_line_count(self):
        """The second family adds a line once m reaches 16."""
        assert len(check_asymptotic_inequalities(4)) == 3
        assert len(check_asymptotic_inequalities(16)) == 4

    def test_asymptotic_bad_m(self):
        """m below 4 is rejected."""
        with pytest.raises(DomainError):
            check_asymptotic_inequalities(2)

    def test_eight_constants(self):
        """The ten-digit eight-shortcut constants are reproduced."""
        eight = check_eight_constants()
        assert len(eight) == 5
        assert all_passed(eight)

    @pytest.mark.parametrize('k', config.PERTURBATION_K)
    def test_perturbation(self, k):
        """No perturbed optimum certifies below the optimal diameter."""
        result = perturbation_spot_check(k)
        assert len(result) == 1
        assert result[0].passed


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
