"""Tests for the theorem3 and remark2 CLI commands."""

import json

import pytest
from typer.testing import CliRunner

from threefold.cli import app


runner = CliRunner()


# =============================================================================
# Fixtures
# =============================================================================


@pytest.fixture
def config_file(tmp_path):
    """Write a remark2 JSON config and return its path."""

    def write(data):
        path = tmp_path / "config.json"
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return path

    return write


# =============================================================================
# Tests for theorem3 command
# =============================================================================


class TestTheorem3Command:
    """Tests for 'threefold theorem3'."""

    def test_ten_points(self):
        """Ten points: forced, case 1."""
        result = runner.invoke(app, ["theorem3", "--n", "10"])

        assert result.exit_code == 0
        assert "n = 10: deg = 0 forced (case 1)" in result.stdout
        assert "sum beta / deg = 17/3" in result.stdout

    def test_structured(self):
        """Structured output is the decision as JSON."""
        result = runner.invoke(app, ["--format", "structured", "theorem3", "--n", "9"])

        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["forced"] is True
        assert payload["case"] == "2"

    def test_raw_constraints_with_system(self):
        """--show-system lists the six-point constraints."""
        result = runner.invoke(app, ["theorem3", "--n", "6", "--raw-constraints", "--show-system"])

        assert result.exit_code == 0
        assert "six points 1 2 3 4 5 6" in result.stdout

    def test_rejects_zero_points(self):
        """n must be positive."""
        result = runner.invoke(app, ["theorem3", "--n", "0"])

        assert result.exit_code != 0


# =============================================================================
# Tests for remark2 command
# =============================================================================


class TestRemark2Command:
    """Tests for 'threefold remark2'."""

    def test_ten_point_lines_pass(self, config_file):
        """Ten points and 45 lines satisfy the criterion."""
        result = runner.invoke(app, ["remark2", "--config", str(config_file({"lines": 10}))])

        assert result.exit_code == 0
        assert "gamma = 45, lambda = 9" in result.stdout
        assert "(6 + gamma)/lambda: 17/3 > 11/2 [ok]" in result.stdout
        assert result.stdout.endswith("criterion holds\n")

    def test_nine_point_lines_fail(self, config_file):
        """Nine points fail on the ratio; the verdict is data, not an error."""
        result = runner.invoke(app, ["remark2", "--config", str(config_file({"lines": 9}))])

        assert result.exit_code == 0
        assert "(6 + gamma)/lambda: 21/4 > 11/2 [FAILS]" in result.stdout
        assert "criterion fails" in result.stdout

    def test_explicit_configuration_structured(self, config_file):
        """An explicit incidence matrix with lambda, as JSON."""
        data = {"incidence": [[1]], "degrees": [1], "genera": [0], "c1_degrees": [2], "lambda": "1"}

        result = runner.invoke(app, ["-f", "structured", "remark2", "--config", str(config_file(data))])

        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["holds"] is True
        assert payload["lam"] == {"numerator": 1, "denominator": 1}

    def test_invalid_configuration(self, config_file):
        """Shape errors are reported and exit 1."""
        data = {"incidence": [[1, 0]], "degrees": [1], "genera": [0], "c1_degrees": [0]}

        result = runner.invoke(app, ["remark2", "--config", str(config_file(data))])

        assert result.exit_code == 1
        assert "Invalid configuration" in result.output

    def test_non_positive_lambda(self, config_file):
        """lambda <= 0 is a precondition error."""
        data = {"incidence": [[0]], "degrees": [1], "genera": [0], "c1_degrees": [0], "lambda": 0}

        result = runner.invoke(app, ["remark2", "--config", str(config_file(data))])

        assert result.exit_code == 1
        assert "lambda must be positive" in result.output
