"""
Unit tests for the command-line front end.

Tests cover:
- JSON payloads of info, invariant, universal and welschinger
- Exit codes for usage, domain, budget and verification failures
- Environment overrides and --pretty rendering
- Run logs written with --log-run
"""
import io
import json
import logging

import pytest

import cli
from cli import EXIT_BUDGET, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, run
from invariants import VerificationReport
from run_logger import RunLogger

TRIANGLE = "[[0,0],[3,0],[0,3]]"


def invoke(*argv):
    """Run the CLI and return (exit code, stdout, stderr)"""
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestPayloads:
    """Test successful subcommands and their JSON"""

    def test_info(self):
        """Test info reports the triangle's floor data"""
        code, out, _ = invoke("info", TRIANGLE)
        assert code == EXIT_OK
        assert json.loads(out)["a"] == 3

    def test_invariant(self):
        """Test G(0) of the triangle is q + 10 + 1/q"""
        code, out, _ = invoke("invariant", TRIANGLE)
        assert code == EXIT_OK
        assert json.loads(out)["G"] == [[-2, "1"], [0, "10"], [2, "1"]]

    def test_invariant_coefficient(self):
        """Test --coeff prints only <G>_1"""
        code, out, _ = invoke("invariant", TRIANGLE, "--coeff", "1")
        assert code == EXIT_OK
        assert json.loads(out)["coefficient"] == 10

    def test_invariant_with_pairing(self):
        """Test an explicit pairing with one pair"""
        code, out, _ = invoke("invariant", TRIANGLE, "--s", "1", "--pairing", "[[5,6]]")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["pairing"] == [[5, 6]]
        assert payload["coefficients_by_codegree"] == [1, 8, 1]

    def test_universal(self):
        """Test universal prints P_0 and P_1"""
        code, out, _ = invoke("universal", "--i", "1")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["family"] == "P"
        assert payload["polynomials"][1]["display"] == "P_1 = y + chi - 2*s - 2"

    def test_universal_singular(self):
        """Test --singular switches to the Q family"""
        code, out, _ = invoke("universal", "--i", "2", "--singular")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["family"] == "Q"
        assert "n_2" in payload["variables"]

    def test_welschinger(self):
        """Test the q = 1 and q = -1 specializations"""
        code, out, _ = invoke("welschinger", TRIANGLE)
        assert code == EXIT_OK
        payload = json.loads(out)
        assert (payload["q=1"], payload["q=-1"]) == (12, 8)

    def test_verify(self):
        """Test verify at i = 1 agrees with P_1"""
        code, out, _ = invoke("verify", TRIANGLE, "--i", "1")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["enumerated"] == payload["universal"] == 10

    def test_pretty(self):
        """Test --pretty renders without JSON"""
        code, out, _ = invoke("--pretty", "invariant", TRIANGLE)
        assert code == EXIT_OK
        assert out
        with pytest.raises(json.JSONDecodeError):
            json.loads(out)


class TestExitCodes:
    """Test the exit-code contract"""

    def test_missing_polygon(self):
        """Test a missing positional argument is a usage error"""
        assert invoke("info")[0] == EXIT_USAGE

    def test_unknown_subcommand(self):
        """Test an unknown subcommand is a usage error"""
        assert invoke("frobnicate")[0] == EXIT_USAGE

    def test_negative_s(self):
        """Test --s -1 is rejected by the parser"""
        assert invoke("invariant", TRIANGLE, "--s", "-1")[0] == EXIT_USAGE

    def test_not_h_transverse(self):
        """Test a polygon with a slope-2 edge is a domain error"""
        code, _, err = invoke("info", "[[0,0],[2,0],[3,1],[3,2],[1,3]]")
        assert code == EXIT_DOMAIN
        assert "NotHTransverse" in err

    def test_object_without_vertices(self):
        """Test a JSON object lacking "vertices" is a domain error, not a traceback"""
        code, _, err = invoke("info", '{"verts":[[0,0],[1,0],[0,1]]}')
        assert code == EXIT_DOMAIN
        assert "MalformedPolygon" in err
        assert "Traceback" not in err

    def test_invalid_pairing(self):
        """Test a pair of non-adjacent positions is a domain error"""
        code, _, err = invoke("invariant", TRIANGLE, "--s", "1", "--pairing", "[[2,4]]")
        assert code == EXIT_DOMAIN
        assert "InvalidPairing" in err

    def test_budget_exhausted(self):
        """Test a one-node budget stops the enumeration"""
        code, _, err = invoke("--budget", "1", "diagrams", "[[0,0],[3,0],[3,3],[0,3]]")
        assert code == EXIT_BUDGET
        assert "SearchBudgetExceeded" in err

    def test_bad_environment_budget(self, monkeypatch):
        """Test a malformed REFINED_FLOOR_BUDGET is a usage error"""
        monkeypatch.setenv("REFINED_FLOOR_BUDGET", "abc")
        code, _, err = invoke("diagrams", TRIANGLE)
        assert code == EXIT_USAGE
        assert "REFINED_FLOOR_BUDGET" in err

    def test_verification_failure_prints_report(self, monkeypatch):
        """Test an inconsistent report exits 4 and still prints the payload"""
        def fake_verify(data, s, i, budget=None, threads=None):
            return VerificationReport(
                polygon=data.vertices, s=s, i=i, polynomial="P", formula="y + chi - 2*s - 2",
                enumerated=10, universal=11, equal=False, theorem="smooth", hypotheses_hold=True,
            )

        monkeypatch.setattr(cli.commands, "verify_universal", fake_verify)
        code, out, err = invoke("verify", TRIANGLE, "--i", "1")
        assert code == EXIT_VERIFICATION
        assert json.loads(out)["consistent"] is False
        assert "VerificationFailure" in err


class TestRunLog:
    """Test --log-run"""

    def test_log_file_written(self, tmp_path, monkeypatch):
        """Test the run log records the command and the exit code"""
        monkeypatch.chdir(tmp_path)
        monkeypatch.setattr(RunLogger, "_instance", None)
        monkeypatch.setattr(logging.getLogger(), "handlers", list(logging.getLogger().handlers))
        code, _, _ = invoke("--log-run", "cli-test", "info", TRIANGLE)
        assert code == EXIT_OK
        text = (tmp_path / "logs" / "run_cli-test.log").read_text(encoding="utf-8")
        assert "COMMAND info" in text
        assert "exit code 0" in text


pytestmark = pytest.mark.cli
