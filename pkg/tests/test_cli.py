import json
import subprocess
import sys

from skein_s1s2.cli import main
from skein_s1s2.elements import parse_annulus_element


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "e", "--n", "3")[:2] == (0, "4\n")
    assert run(capsys, "count", "p", "--n", "5")[:2] == (0, "7\n")


def test_hecke_reduce(capsys):
    code, out, _ = run(capsys, "hecke", "reduce", "--n", "2", "--word", "1 1")
    assert code == 0 and out.strip() == "x*(s - s^-1) * w[2 1] + x^2 * w[1 2]"


def test_young_idempotent_check(capsys):
    code, out, _ = run(capsys, "young", "idempotent", "--partition", "[2,1]", "--check")
    assert code == 0 and out.strip().endswith("idempotent: ok")


def test_relations_report(capsys):
    code, out, _ = run(capsys, "s1s2", "relations", "--winding", "1", "--size", "1", "--slack", "1")
    assert code == 0
    assert "(-x^2*v^-2 + 1) A[1]" in out
    assert "quotient_dim = 0" in out and "stable_under_slack_plus_1 = true" in out


def test_invariant(capsys):
    assert run(capsys, "s1s2", "invariant", "--element", "A[1,-1]")[1].strip() == "1 * phi"
    assert run(capsys, "s1s2", "invariant", "--element", "A[]")[1].strip() == "1 * phi"


def test_closure_round_trips(capsys):
    code, out, _ = run(capsys, "closure", "--partition", "[2]")
    assert code == 0
    e = parse_annulus_element(out.strip())
    assert str(e) == out.strip()
    code, out2, _ = run(capsys, "closure", "--word", "1", "--n", "2")
    assert out2.strip() == "A[2]"


def test_relative_commands(capsys):
    code, out, _ = run(capsys, "relative", "cap", "--element", "A'[2]")
    assert code == 0 and out.splitlines()[0] == "short: A[2]"
    code, out, _ = run(capsys, "relative", "wire", "--element", "A'[1]", "--turns", "1")
    assert code == 0 and out.strip().endswith("A[2]")
    code, out, _ = run(capsys, "relative", "convert", "--element", "A'[0]")
    assert out.strip() == "3:A'[0] 1"


def test_diagram_file(capsys, tmp_path):
    f = tmp_path / "d.txt"
    f.write_text("strands 2\norient d d\nslices\nX 0 R\n")
    assert run(capsys, "diagram", "eval", "--file", str(f))[1].strip() == "A[2]"
    f.write_text("strands 2\norient d q\n")
    code, _, err = run(capsys, "diagram", "eval", "--file", str(f))
    assert code == 1 and "line 2" in err


def test_separate_n(capsys):
    assert run(capsys, "scalar", "separate-n", "--poly", "x + v")[1].strip() == "2"


def test_json(capsys):
    code, out, _ = run(capsys, "--json", "count", "e", "--n", "6")
    assert code == 0 and json.loads(out) == {"e": 19, "n": 6}


def test_exit_codes(capsys):
    assert run(capsys, "count", "q", "--n", "1")[0] == 2
    assert run(capsys, "hecke", "reduce", "--n", "2")[0] == 2
    assert run(capsys, "hecke", "reduce", "--n", "2", "--word", "3")[0] == 1
    assert run(capsys, "young", "idempotent", "--partition", "[1,2]")[0] == 1
    assert run(capsys, "s1s2", "invariant", "--element", "A[1]")[0] == 1


def test_limits_from_config(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "limits.json"
    cfg.write_text(json.dumps({"limits": {"max_hecke_strands": 2}}))
    monkeypatch.setenv("SKEIN_S1S2_CONFIG", str(cfg))
    code, _, err = run(capsys, "hecke", "reduce", "--n", "3", "--word", "1")
    assert code == 1 and "max_hecke_strands" in err


def test_console_output_is_deterministic():
    cmd = [sys.executable, "-m", "skein_s1s2.cli", "s1s2", "relations", "--winding", "0", "--size", "1", "--slack", "1"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"quotient_dim = 1" in a
