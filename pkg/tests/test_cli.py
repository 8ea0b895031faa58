"""
Tests for the command-line interface
"""

import json

import pytest

from ncyb.cli import EXIT_PASS, EXIT_USAGE, build_parser, emit_report, main
from ncyb.core.report import Report, failed, passed


@pytest.fixture
def report():
    """Report with one pass and one fail"""
    r = Report("appendixB", {"suite": "appendixB", "n": 2})
    r.extend([passed("a", "x"), failed("b", "y", {"lhs": "1", "rhs": "2"})])
    return r


class TestParser:
    """Test argument parsing"""

    def test_verify_arguments(self):
        """Test verify flags are parsed"""
        args = build_parser().parse_args(
            ["verify", "quasidet", "--n", "3", "--seed", "7", "--trunc-order", "8"]
        )

        assert args.command == "verify"
        assert args.suite == "quasidet"
        assert args.n == 3
        assert args.seed == 7
        assert args.trunc_order == 8

    def test_demo_defaults(self):
        """Test demo defaults to n=3, classical"""
        args = build_parser().parse_args(["demo", "map"])

        assert args.n == 3
        assert not args.quantum


class TestMain:
    """Test exit statuses and output"""

    def test_unknown_suite_is_usage_error(self, capsys):
        """Test an unknown suite exits 2"""
        assert main(["verify", "nosuch"]) == EXIT_USAGE
        assert "unknown suite" in capsys.readouterr().err

    def test_missing_command_is_usage_error(self):
        """Test a bare invocation exits 2"""
        assert main([]) == EXIT_USAGE

    def test_bad_mode_is_usage_error(self):
        """Test a mode outside the choices exits 2"""
        assert main(["verify", "quasidet", "--mode", "float"]) == EXIT_USAGE

    def test_invalid_rank_is_usage_error(self):
        """Test n < 2 fails validation with exit 2"""
        assert main(["verify", "appendixB", "--n", "1"]) == EXIT_USAGE

    def test_symbolic_bound_is_usage_error(self):
        """Test symbolic work above the bound exits 2"""
        assert main(["verify", "quasidet", "--mode", "symbolic", "--n", "5"]) == EXIT_USAGE

    def test_verify_prints_json(self, capsys):
        """Test a passing suite prints its JSON report"""
        code = main(["verify", "appendixB", "--trunc-order", "6"])

        out = json.loads(capsys.readouterr().out)
        assert code == EXIT_PASS
        assert out["suite"] == "appendixB"
        assert out["status"] == "pass"
        assert out["config"]["trunc_order"] == 6

    def test_verify_writes_json_file(self, tmp_path, capsys):
        """Test --json writes the report and prints a summary"""
        path = tmp_path / "report.json"

        code = main(["verify", "appendixB", "--trunc-order", "6", "--json", str(path)])

        assert code == EXIT_PASS
        assert json.loads(path.read_text(encoding="utf-8"))["status"] == "pass"
        assert capsys.readouterr().out.startswith("suite appendixB: PASS")

    def test_unwritable_output_is_usage_error(self, tmp_path):
        """Test I/O failures exit 2"""
        path = tmp_path / "missing" / "report.json"

        argv = ["verify", "appendixB", "--trunc-order", "4", "--json", str(path)]

        assert main(argv) == EXIT_USAGE

    def test_demo_map(self, capsys):
        """Test the classical demo prints the map"""
        assert main(["demo", "map", "--n", "2"]) == EXIT_PASS

        out = capsys.readouterr().out
        assert out.startswith("classical Yang-Baxter map, n=2")
        assert "ell~+(1)_11 = " in out


class TestEmitReport:
    """Test report serialization"""

    def test_json(self, report):
        """Test JSON output carries status and records"""
        data = json.loads(emit_report(report, "json"))

        assert data["status"] == "fail"
        assert [c["name"] for c in data["checks"]] == ["a", "b"]

    def test_text_lists_non_passing(self, report):
        """Test text output lists only non-passing records"""
        text = emit_report(report, "text")

        assert "[fail] b (y)" in text
        assert "] a (x)" not in text

    def test_writes_file(self, report, tmp_path):
        """Test output goes to the given path"""
        path = tmp_path / "r.json"

        text = emit_report(report, "json", str(path))

        assert path.read_text(encoding="utf-8") == text

    def test_unknown_format(self, report):
        """Test unknown formats are rejected"""
        with pytest.raises(ValueError, match="unknown report format"):
            emit_report(report, "yaml")
