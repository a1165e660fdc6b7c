from __future__ import annotations

import json
import subprocess
import sys

import pytest

from weakarith.cli import CliConfig, main, run_command


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_defaults():
    cfg = CliConfig()
    assert (cfg.seed, cfg.samples, cfg.bound, cfg.output_mode) == (0, 10_000, 50, "text")


def test_solve_both(capsys):
    code, out, _ = run(capsys, "solve", "--bound", "50", "--method", "both", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["agree"] and doc["count"] == 16
    assert doc["solutions"][0] == [2, 2, 2] and doc["solutions"][-1] == [11, 6, 2]


def test_solve_text(capsys):
    code, out, _ = run(capsys, "solve", "--bound", "4", "--method", "naive")
    assert code == 0 and out.startswith("4 triples")


def test_pt(capsys):
    assert run(capsys, "pt", "--model", "R3_X", "sqrt3*X")[:2] == (0, "PT: true\n")
    code, out, _ = run(capsys, "pt", "--model", "R3_X", "3*X^2", "--format", "json")
    assert json.loads(out) == {"model": "R3_X", "expr": "3*X^2", "pt": False, "non_even_divisor": "3"}


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--model", "R3_X", "sqrt3*X", "*", "sqrt3*X", "--ascii")
    assert code == 0 and out.startswith("3*X^2")
    code, out, _ = run(capsys, "eval", "--model", "R3_X", "X", "|", "sqrt3*X")
    assert out.strip() == "false"
    code, out, _ = run(capsys, "eval", "--model", "R3_X", "X", "<", "sqrt3*X")
    assert out.strip() == "true"
    code, out, _ = run(capsys, "eval", "--model", "DY_XYZ", "2", "|", "3*X - 2", "--format", "json")
    assert json.loads(out)["cofactor"] == "3/2*X - 1"


def test_kmn(capsys):
    code, out, _ = run(capsys, "kmn", "--model", "INT", "12", "8")
    assert out.strip() == "kappa = 4, mu = 3, nu = 2"
    code, out, _ = run(capsys, "kmn", "--model", "Q2_X", "X", "sqrt2*X", "--format", "json")
    assert json.loads(out)["found"] is False


def test_claims(capsys):
    code, out, _ = run(capsys, "claims", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and all(r["status"] == "pass" for r in doc)


def test_axioms_failure_exit_code(capsys):
    code, out, _ = run(capsys, "axioms", "--model", "Z_X", "--samples", "200", "--check", "OE", "--format", "json")
    assert code == 1
    assert json.loads(out) == [{"model": "Z_X", "check": "OE", "status": "fail", "samples": 4, "witness": ["X + 1"]}]
    code, _, _ = run(capsys, "axioms", "--model", "INT", "--samples", "200", "--check", "COMM_MUL")
    assert code == 0


def test_axioms_json_byte_stable(capsys):
    argv = ["axioms", "--model", "R3_X", "--samples", "300", "--seed", "4", "--check", "properties", "--format", "json"]
    first = run(capsys, *argv)[1]
    assert first == run(capsys, *argv)[1]
    assert first.isascii()


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["solve", "--bound", "x"],
        ["solve", "--frobnicate"],
        ["pt", "--model", "R3_X", "X +* 1"],
        ["pt", "--model", "R3_X", "X + 1/2"],
        ["pt", "--model", "NOPE", "X"],
        ["eval", "--model", "Z_X", "X", "-", "X + 1"],
        ["axioms", "--check", "NOT_A_TAG"],
        ["solve", "--bound", "0"],
        ["pt", "--model", "R3_X", "X^3 + X + 1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_output_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "solve", "--bound", "11", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["count"] == 16


def test_run_command_result():
    result = run_command(["pt", "--model", "INT", "64"])
    assert (result.code, result.text) == (0, "PT: true\n")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "weakarith", "pt", "--model", "R3_X", "sqrt3*X"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "PT: true\n"
