import io
import subprocess
import sys
from pathlib import Path

import pytest

from coxeter_nc.cli import run

GROUPS = Path(__file__).resolve().parent.parent / "groups"


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def g(name):
    return str(GROUPS / name)


def test_reduce_example():
    assert cli("reduce", "--group", g("a3.cox"), "--word", "2 1 2") == (0, "1 2 1\n")


def test_reduce_round_trip():
    code, out = cli("reduce", "--group", g("b3.cox"), "--word", "3 2 3 2 1 3 3 1")
    assert code == 0
    assert cli("reduce", "--group", g("b3.cox"), "--word", out.strip()) == (0, out)


def test_reduce_identity_and_names():
    assert cli("reduce", "--group", g("a2.cox"), "--word", "1 1") == (0, "\n")
    assert cli("reduce", "--group", g("triangle_inf.cox"), "--word", "b a a c") == (0, "b c\n")


def test_equal():
    assert cli("equal", "--group", g("a2.cox"), "--word", "1 2 1", "--word2", "2 1 2")[1] == "true\n"
    assert cli("equal", "--group", g("i2_4.cox"), "--word", "1 2", "--word2", "2 1")[1] == "false\n"


def test_refl():
    code, out = cli("refl", "--group", g("a3.cox"), "--word", "1 3 2 3 1")
    assert code == 0 and out == "reflection: true\npalindrome: 1 3 2 3 1\n"
    assert cli("refl", "--group", g("a3.cox"), "--word", "1 2 3")[1] == "reflection: false\n"


def test_reflections():
    code, out = cli("reflections", "--group", g("i2_inf.cox"), "--max-len", "5")
    assert code == 0 and out.splitlines()[0] == "count: 6"


def test_tlength():
    assert cli("tlength", "--group", g("a3.cox"), "--word", "1 2 3") == (0, "3\n")
    code, out = cli("tlength", "--group", g("a3.cox"), "--word", "1 2 1 3 2 1", "--witness")
    assert code == 0 and out.splitlines()[0] == "2" and len(out.splitlines()) == 3


def test_leq():
    assert cli("leq", "--group", g("a3.cox"), "--word", "2", "--word2", "1 2 3")[1] == "true\n"


def test_dihedral():
    code, out = cli("dihedral", "--group", g("a3.cox"), "--t", "1", "--t2", "3")
    assert code == 0
    assert "canonical_pair: (1) (3)" in out


def test_lattice_example():
    out = cli("lattice", "--group", g("a3.cox"), "--top", "1 2 3")
    assert out == (0, "lattice: true, elements: 14, bowties: 0\n")


def test_lattice_h3_ignores_cutoff():
    code, out = cli("lattice", "--group", g("h3.cox"), "--top", "1 2 3", "--cutoff", "3")
    assert out == "lattice: true, elements: 32, bowties: 0\n"


def test_bounded_evidence_label():
    code, out = cli("bowties", "--group", g("affine_a2.cox"), "--top", "1 2 3", "--cutoff", "5")
    assert code == 0 and out == "bowties: 0 (bounded evidence, cutoff 5)\n"


def test_interval_dot(tmp_path):
    dot = tmp_path / "a3.dot"
    code, out = cli("interval", "--group", g("a3.cox"), "--top", "1 2 3", "--dot", str(dot))
    assert code == 0
    n = int(out.splitlines()[0].split(":")[1])
    assert n == 14
    assert dot.read_text().count("[label=") == n


def test_balance_and_present(tmp_path):
    code, out = cli("balance", "--group", g("h3.cox"), "--word", "1 2 3")
    assert out == "balanced: true, left: 32, right: 32\n"
    target = tmp_path / "pres.txt"
    code, out = cli("present", "--group", g("a2.cox"), "--top", "1 2", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("generators: 4\n") and "g1 g2 = g3" in text


def test_present_refuses_truncated():
    code, _ = cli("present", "--group", g("affine_a2.cox"), "--top", "1 2 3", "--cutoff", "5")
    assert code == 1


@pytest.mark.parametrize("argv, code", [
    (["reduce", "--group", "a3.cox", "--word", "1 4"], 1),
    (["reduce", "--group", "a3.cox", "--word", "x"], 1),
    (["reduce", "--group", "missing.cox", "--word", "1"], 1),
    (["reduce", "--group", "a3.cox"], 1),
    (["refl", "--group", "a3.cox", "--word", "1 2"], 0),
    (["interval", "--group", "a3.cox", "--bottom", "1 3", "--top", "1 2"], 1),
    (["reflections", "--group", "affine_a2.cox", "--max-len", "9", "--max-ball", "5"], 2),
])
def test_exit_codes(argv, code, capsys):
    argv = [g(a) if a.endswith(".cox") else a for a in argv]
    with pytest.raises(SystemExit) as info:
        raise SystemExit(run(argv, stdout=io.StringIO()))
    assert info.value.code == code


def test_bad_matrix_file(tmp_path):
    bad = tmp_path / "bad.cox"
    bad.write_text("2\n1 3\n4 1\n")
    assert cli("reduce", "--group", str(bad), "--word", "1")[0] == 1


def test_crosscheck_failure_exit_code(monkeypatch):
    from coxeter_nc.errors import InvariantViolation
    import coxeter_nc.cli as mod

    def boom(*a, **k):
        raise InvariantViolation("forced")
    monkeypatch.setattr(mod, "reflection_length", boom)
    assert cli("tlength", "--group", g("a3.cox"), "--word", "1")[0] == 3


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "coxeter_nc", "interval", "--group", g("b3.cox"), "--top", "1 2 3"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"elements: 20\n")
