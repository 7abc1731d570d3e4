import json
import subprocess
import sys

from ruledfano.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_chow_eval(capsys):
    code, out, _ = run(capsys, "chow", "eval", "--c", "1", "xi^2")
    assert code == 0 and out == "2*xi*f - f^2\ndegree: 0\n"
    code, out, _ = run(capsys, "chow", "eval", "--c", "2", "h^3")
    assert out.splitlines()[1] == "degree: 11"


def test_chi_with_twist(capsys):
    code, out, _ = run(capsys, "chi", "--c", "0", "--rank", "2", "--c1", "2*xi+3*f",
                       "--c2", "8*xi*f+5*f^2", "--twist=-h")
    assert code == 0 and out == "-8\n"


def test_cohomology_tables(capsys):
    code, out, _ = run(capsys, "coh", "line", "--c", "0", "--l1", "1", "--l2", "0")
    assert out == "h0=7 h1=0 h2=0 h3=0\n"
    code, out, _ = run(capsys, "coh", "sym", "--c", "3", "-m", "2", "-b", "-3")
    assert code == 0 and out.strip().endswith("(bounds only)")


def test_instanton_commands(capsys):
    code, out, _ = run(capsys, "instanton", "invariants", "--c", "1", "--alpha", "6", "--beta", "2")
    assert code == 0 and "charge: 0" in out and "ulrich: yes" in out
    code, out, _ = run(capsys, "instanton", "serre", "--c", "0", "-m", "3")
    assert "codimension: -1" in out
    code, out, _ = run(capsys, "instanton", "transform", "--c", "1", "--alpha", "6", "--beta", "2")
    assert "ext1: 14" in out and "charge: 1" in out
    code, out, _ = run(capsys, "instanton", "pullback", "--c", "2", "-l", "1")
    assert "ulrich: yes" in out
    code, out, _ = run(capsys, "instanton", "hoppe", "--c", "1", "--amin", "0", "--amax", "0",
                       "--bmin", "-4", "--bmax", "-3")
    assert out.splitlines()[2:] == ["points: 1", "0 -4"]


def test_input_errors_exit_2(capsys):
    code, _, err = run(capsys, "chow", "eval", "--c", "0", "xi*(f+f")
    assert code == 2 and "offset 8" in err
    code, _, err = run(capsys, "chow", "eval", "--c", "7", "xi")
    assert code == 2 and err.startswith("error:")


def test_verify_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--serial")
    assert code == 0 and "failed 0, skipped 3" in out
    bad = tmp_path / "l.json"
    bad.write_text(json.dumps({"version": 1, "entries": [
        {"id": "x", "description": "", "citation": "", "kind": "chow-identity",
         "inputs": {"op": "degree", "c": 0, "expr": "f^3"}, "expected": 1}]}))
    code, out, _ = run(capsys, "verify", "--ledger", str(bad), "--json")
    assert code == 1 and json.loads(out)["failed"] == 1
    bad.write_text("{")
    code, _, err = run(capsys, "verify", "--ledger", str(bad))
    assert code == 2 and "parse error" in err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "ruledfano", "chow", "eval", "--c", "0", "xi^3"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.splitlines() == ["4*xi*f^2", "degree: 4"]
