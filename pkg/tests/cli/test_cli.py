"""Tests for the stripcomb command line."""

import json
from unittest.mock import patch

import pytest

from stripcomb.cli import main
from stripcomb.models.report import ConjectureReport, Status


def run(argv, capsys):
    """Run the CLI and return its exit code and stdout."""
    with pytest.raises(SystemExit) as exc_info:
        main(argv)
    return exc_info.value.code, capsys.readouterr().out


def test_count(capsys):
    """Test a(7,4)."""
    code, out = run(["count", "--n", "7", "--k", "4"], capsys)
    assert code == 0
    assert out.strip() == "27"


def test_count_with_grading(capsys):
    """Test a(n,1,1,1) and a weighted count at t = 2."""
    assert run(["count", "--n", "5", "--k", "1", "--z", "1"], capsys)[1].strip() == "21"
    assert run(["count", "--n", "6", "--k", "3", "--t", "2"], capsys)[1].strip() == "43"


def test_count_json(capsys):
    """Test JSON output."""
    code, out = run(["count", "--n", "7", "--k", "4", "--format", "json"], capsys)
    assert json.loads(out) == [{"n": 7, "k": 4, "value": 27}]


def test_poly(capsys):
    """Test the canonical text form of a(6,3,t)."""
    code, out = run(["poly", "--n", "6", "--k", "3"], capsys)
    assert code == 0
    assert out.strip() == "1 + 5*t + 6*t^2 + t^3"


def test_series_csv(capsys):
    """Test series coefficients as CSV."""
    code, out = run(["series", "--gf", "numbers", "--k", "3", "--order", "6", "--format", "csv"], capsys)
    assert out.splitlines() == ["n,value", "0,1", "1,1", "2,2", "3,3", "4,5", "5,8", "6,13"]


def test_series_needs_strip(capsys):
    """Test the usage error for a series without a strip."""
    code, _ = run(["series", "--gf", "numbers"], capsys)
    assert code == 2


def test_table(capsys):
    """Test a corridor table."""
    code, out = run(["table", "--kind", "corridor", "--n", "1"], capsys)
    assert out.splitlines() == ["n,j,value", "0,0,1", "1,0,1", "1,1,1"]


def test_walk_table_needs_k(capsys):
    """Test that walk tables require --k."""
    assert run(["table", "--kind", "walks", "--n", "3"], capsys)[0] == 2


def test_guess(capsys):
    """Test guessing the strip-4 recurrence."""
    code, out = run(["guess", "--strip", "4", "--offset", "1", "--max-order", "3", "--terms", "16"], capsys)
    assert code == 0
    assert out.strip() == "order 2, char poly 1 - 3*x^2, valid from n=1"


def test_oeis_offline(tmp_path, capsys):
    """Test the Fibonacci strip against the bundled A000045."""
    code, out = run(["oeis", "--anum", "A000045", "--cache-dir", str(tmp_path)], capsys)
    assert code == 0
    assert out.startswith("A000045 match")


def test_oeis_needs_selection(capsys):
    """Test that oeis without --anum or --all is a usage error."""
    assert run(["oeis"], capsys)[0] == 2


def test_bad_flag(capsys):
    """Test argparse usage errors."""
    with pytest.raises(SystemExit) as exc_info:
        main(["count", "--n", "seven", "--k", "4"])
    assert exc_info.value.code == 2


def test_version(capsys):
    """Test --version."""
    code, out = run(["--version"], capsys)
    assert code == 0
    assert out.strip() == "stripcomb 0.3.0"


def test_verify_writes_report(tmp_path, capsys):
    """Test the verify command with a stubbed workflow."""
    failing = ConjectureReport(
        "conjecture1", {"j": [1, 2]}, Status.COUNTEREXAMPLE, checked_upto={}, witness={"params": {"j": 1, "k": 0}}
    )
    final_state = {"reports": [failing], "errors": [], "exit_code": 1}
    report_path = tmp_path / "report.json"
    with patch("stripcomb.cli.run_workflow", return_value=final_state) as mock_run:
        code, out = run(["verify", "--suite", "conjectures", "--report", str(report_path)], capsys)

    assert code == 1
    assert mock_run.call_args.args[0]["suite"] == "conjectures"
    assert out.splitlines()[0] == "COUNTEREXAMPLE conjecture1"
    assert json.loads(out.splitlines()[1]) == {"params": {"j": 1, "k": 0}}
    saved = json.loads(report_path.read_text(encoding="utf-8"))
    assert saved[0]["id"] == "conjecture1"
    assert saved[0]["status"] == "COUNTEREXAMPLE"
