"""
Tests for the command-line interface.

Commands are driven through click's CliRunner, the way a shell would call them.
"""

import sys
import os
import json
import math

import pytest
from click.testing import CliRunner

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import config
from cli.app import create_cli
from cli.parsing import parse_angle
from geometry.documents import load_config
from geometry.errors import DomainError
from geometry.utils.calculations import MAX_BUDGET


@pytest.fixture
def cli():
    return create_cli()


@pytest.fixture
def runner():
    return CliRunner()


def value_of(output, label):
    """Number printed on the row labelled `label`."""
    for line in output.splitlines():
        parts = line.split()
        if len(parts) == 2 and parts[0] == label:
            return float(parts[1])
    raise AssertionError(f"no row {label!r} in output:\n{output}")


class TestSolveCommand:
    """Tests for `solve`."""

    def test_three(self, cli, runner):
        """solve 3 prints the three-shortcut constants."""
        result = runner.invoke(cli, ['solve', '3'])
        assert result.exit_code == 0
        assert value_of(result.output, 'a*') == pytest.approx(1.8435, abs=5e-4)
        assert value_of(result.output, 'd*') == pytest.approx(0.2509, abs=5e-4)
        assert 'n/a' in result.output

    def test_eight(self, cli, runner):
        """solve 8 prints the eight-shortcut constants."""
        result = runner.invoke(cli, ['solve', '8'])
        assert result.exit_code == 0
        assert value_of(result.output, 'a1') == pytest.approx(1.999870869, abs=5e-5)

    def test_k_too_small(self, cli, runner):
        """k below 2 is a usage error."""
        result = runner.invoke(cli, ['solve', '1'])
        assert result.exit_code == 2


class TestMakeAndMetricCommands:
    """Tests for `make`, `diam`, `dist` and `cover`."""

    def test_make_to_stdout(self, cli, runner):
        """make without -o prints the JSON document."""
        result = runner.invoke(cli, ['make', '2'])
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert len(document['shortcuts']) == 2

    def test_make_then_diam(self, cli, runner, tmp_path):
        """A saved six-diameter document certifies 1 + π/2."""
        path = str(tmp_path / 'six.json')
        result = runner.invoke(cli, ['make', '6', '-o', path])
        assert result.exit_code == 0
        assert len(load_config(path)) == 6

        result = runner.invoke(cli, ['diam', path, '--step', '0.002'])
        assert result.exit_code == 0
        assert value_of(result.output, 'lo') == pytest.approx(MAX_BUDGET, abs=5e-3)
        assert value_of(result.output, 'hi') >= MAX_BUDGET - 1e-9

    def test_make_asymptotic(self, cli, runner, tmp_path):
        """make asym reports both family counts."""
        path = str(tmp_path / 'asym.json')
        result = runner.invoke(cli, ['make', 'asym', '4', '-o', path])
        assert result.exit_code == 0
        assert 'family 2' in result.output

    def test_make_asymptotic_needs_m(self, cli, runner):
        """make asym without m fails with a message."""
        result = runner.invoke(cli, ['make', 'asym'])
        assert result.exit_code == 1
        assert 'Error' in result.output

    def test_dist(self, cli, runner, tmp_path):
        """dist prints the distance between two angles."""
        path = str(tmp_path / 'six.json')
        runner.invoke(cli, ['make', '6', '-o', path])
        result = runner.invoke(cli, ['dist', path, '0', 'pi'])
        assert result.exit_code == 0
        assert value_of(result.output, 'length') <= math.pi

    def test_dist_bad_angle(self, cli, runner, tmp_path):
        """An unparseable angle is a usage error."""
        path = str(tmp_path / 'six.json')
        runner.invoke(cli, ['make', '6', '-o', path])
        result = runner.invoke(cli, ['dist', path, 'north', 'pi'])
        assert result.exit_code == 2

    def test_cover(self, cli, runner, tmp_path):
        """cover reports a covered strip below the target."""
        path = str(tmp_path / 'two.json')
        runner.invoke(cli, ['make', '2', '-o', path])
        result = runner.invoke(cli, ['cover', path, '0.09'])
        assert result.exit_code == 0
        assert '✓ covered' in result.output

        result = runner.invoke(cli, ['cover', path, '0.2'])
        assert result.exit_code == 1
        assert '✗ gap' in result.output

    def test_malformed_document(self, cli, runner, tmp_path):
        """A malformed document exits with status 1."""
        path = tmp_path / 'bad.json'
        path.write_text('{"version": 1, "shortcuts": "none"}', encoding='utf-8')
        result = runner.invoke(cli, ['diam', str(path)])
        assert result.exit_code == 1
        assert 'Error' in result.output

    def test_missing_document(self, cli, runner, tmp_path):
        """A missing document is a usage error."""
        result = runner.invoke(cli, ['diam', str(tmp_path / 'absent.json')])
        assert result.exit_code == 2


class TestReportCommands:
    """Tests for `verify` and `render`."""

    def test_verify(self, cli, runner):
        """verify passes every appendix line."""
        result = runner.invoke(cli, ['verify'])
        assert result.exit_code == 0
        assert result.output.rstrip().endswith('58/58 pass')

    def test_verify_json(self, cli, runner):
        """verify --json prints one record per line."""
        result = runner.invoke(cli, ['verify', '--json'])
        assert result.exit_code == 0
        assert len(json.loads(result.output)) == 58

    def test_verify_all(self, cli, runner, monkeypatch):
        """verify --all adds the standalone and perturbation checks."""
        monkeypatch.setattr(config, 'PERTURBATION_TRIALS', 2)
        monkeypatch.setattr(config, 'GROWTH_SAMPLE_M', (4,))
        result = runner.invoke(cli, ['verify', '--all'])
        assert result.exit_code == 0
        for k in config.PERTURBATION_K:
            assert f'Perturbed optimum, k = {k}' in result.output
        passed, total = result.output.split()[-2].split('/')
        assert passed == total
        assert int(total) > config.APPENDIX_LINE_COUNT + len(config.PERTURBATION_K)

    def test_render(self, cli, runner, tmp_path):
        """render writes an SVG file."""
        document = str(tmp_path / 'three.json')
        svg = tmp_path / 'three.svg'
        runner.invoke(cli, ['make', '3', '-o', document])
        result = runner.invoke(cli, ['render', 'strip', document, '-o', str(svg)])
        assert result.exit_code == 0
        assert '<svg' in svg.read_text(encoding='utf-8')

    def test_render_to_stdout(self, cli, runner, tmp_path):
        """render without -o prints the SVG."""
        document = str(tmp_path / 'three.json')
        runner.invoke(cli, ['make', '3', '-o', document])
        result = runner.invoke(cli, ['render', 'circle', document, '--umbra'])
        assert result.exit_code == 0
        assert '<svg' in result.output


class TestParseAngle:
    """Tests for angle arguments."""

    @pytest.mark.parametrize('text, expected', [
        ('pi', math.pi),
        ('-pi', -math.pi),
        ('0.5pi', math.pi / 2),
        ('0.75*pi', 0.75 * math.pi),
        ('π', math.pi),
        ('1.25', 1.25),
    ])
    def test_accepted(self, text, expected):
        """Numbers and multiples of pi are accepted."""
        assert parse_angle(text) == pytest.approx(expected)

    @pytest.mark.parametrize('text', ['north', 'inf', '', 'pi/2'])
    def test_rejected(self, text):
        """Anything but a finite number or a multiple of pi is rejected."""
        with pytest.raises(DomainError):
            parse_angle(text)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
