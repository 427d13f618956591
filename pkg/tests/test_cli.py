import io
import subprocess
import sys

import pytest

from ohyper.cli import run_cli
from ohyper.io import parse_ohg
from ohyper.laws import LAWS

from conftest import FIXTURES

P3 = str(FIXTURES / "p3.ohg")
FANO = str(FIXTURES / "fano.bibd")


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_matrix_p3():
    assert run("matrix", "--kind", "adjacency", P3) == (0, "0 -1 0\n-1 0 1\n0 1 0\n", "")
    assert run("matrix", "--kind", "laplacian", P3)[1] == "1 1 0\n1 2 -1\n0 -1 1\n"
    assert run("matrix", "--kind", "incidence", "--dual", P3)[1] == "1 1 0\n0 1 -1\n"
    assert run("matrix", "--kind", "degree", P3)[1] == "1 0 0\n0 2 0\n0 0 1\n"


def test_spectrum_p3():
    assert run("spectrum", "--matrix", "laplacian", P3)[1] == "3.000000\n1.000000\n0.000000\n"
    assert run("spectrum", "--matrix", "laplacian", "--dual", P3)[1] == "3.000000\n1.000000\n"
    assert run("spectrum", "--matrix", "adjacency", P3)[1] == "1.414214\n0.000000\n-1.414214\n"


def test_info():
    code, out, _ = run("info", P3)
    assert code == 0
    assert out == "vertices 3\nedges 2\nmax_degree 2\nrank 2\nlinear yes\nuniform 2\nregular no\n"
    assert "regular 3" in run("info", FANO)[1]


def test_dual_linegraph_section():
    assert run("dual", P3)[1] == (
        "ohg 1\nvertex e1\nvertex e2\nedge v1 = e1:+\nedge v2 = e1:+ e2:+\nedge v3 = e2:-\n"
    )
    assert run("linegraph", P3)[1] == "ohg 1\nvertex e1\nvertex e2\nedge e1~e2 = e1:+ e2:+\n"
    code, out, _ = run("section", "-k", "2", "--strict", P3)
    assert code == 0 and "edge e1|{v1,v2} = v1:+ v2:+" in out


def test_linegraph_nonlinear_exit_2():
    text = "ohg 1\nvertex a\nvertex b\nedge e = a:+ b:+\nedge f = a:+ b:-\n"
    code, out, err = run("linegraph", "-", stdin=text)
    assert code == 2 and out == "" and "not linear" in err


def test_switch():
    code, out, _ = run("switch", "--vertex-switch", "v2=-1", "--edge-switch", "e2=-1", P3)
    assert code == 0
    assert out.endswith("edge e1 = v1:+ v2:-\nedge e2 = v2:+ v3:+\n")
    assert run("switch", "--vertex-switch", "nope=-1", P3)[0] == 1
    assert run("switch", "--vertex-switch", "v1=0", P3)[0] == 1


def test_stdin_dash():
    text = (FIXTURES / "p3.ohg").read_text()
    assert run("matrix", "--kind", "adjacency", "-", stdin=text)[1] == "0 -1 0\n-1 0 1\n0 1 0\n"


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("frobnicate",),
        ("matrix", P3),
        ("matrix", "--kind", "bogus", P3),
        ("verify", P3),
        ("verify", "--law", "lemma-9.9", P3),
        ("verify", "--all", "--trials", "0"),
        ("section", "-k", "x", P3),
        ("info", "/nonexistent/file.ohg"),
    ],
)
def test_usage_errors_exit_1(argv):
    code, out, err = run(*argv)
    assert code == 1 and err


def test_parse_error_exit_1():
    code, _, err = run("info", "-", stdin="ohg 1\nvertex a\nedge e = b:+\n")
    assert code == 1 and "line 3" in err


def test_bibd_commands():
    code, out, _ = run("bibd", "fano")
    assert code == 0 and out == (FIXTURES / "fano.bibd").read_text()
    code, out, _ = run("bibd", "check", "-", stdin=out)
    assert code == 0 and out.startswith("parameters 7 7 3 3 1\n")
    broken = (FIXTURES / "fano.bibd").read_text().replace("block b0 = 0 1 3", "block b0 = 0 1 2")
    code, _, err = run("bibd", "check", "-", stdin=broken.replace("params 7 7 3 3 1\n", ""))
    assert code == 3 and "not a BIBD" in err and "lies in 0 blocks" in err


def test_verify_file_modes(tmp_path):
    code, out, _ = run("verify", "--law", "lemma-2.1", P3)
    assert code == 0 and out.startswith("lemma-2.1: pass")
    code, out, _ = run("verify", "--law", "lemma-4.5", P3)
    assert code == 2 and "hypothesis not met" in out
    code, out, _ = run("verify", "--all", P3, "--witness-dir", str(tmp_path))
    assert code == 0 and out.count("\n") == len(LAWS)
    code, out, _ = run("verify", "--law", "theorem-6.1", FANO)
    assert code == 0 and "pass" in out


def test_verify_trials_deterministic():
    a = run("verify", "--all", "--trials", "15", "--seed", "4")
    b = run("verify", "--all", "--trials", "15", "--seed", "4")
    assert a == b and a[0] == 0
    assert a[1].count(": pass") == len(LAWS)


def _break_law(monkeypatch, law_id):
    law = LAWS[law_id]
    broken = law.__class__(law.law_id, law.hypothesis,
                           lambda G, rng, rep: rep.check("planted failure", G.m == 0), law.preset)
    monkeypatch.setitem(LAWS, law_id, broken)


def test_violation_writes_replayable_witness(monkeypatch, tmp_path):
    _break_law(monkeypatch, "lemma-2.2")
    code, out, err = run("verify", "--law", "lemma-2.2", "--trials", "20", "--seed", "9",
                         "--witness-dir", str(tmp_path))
    assert code == 3 and "lemma-2.2: fail" in out
    files = list(tmp_path.glob("witness-lemma-2.2-*.ohg"))
    assert len(files) == 1
    text = files[0].read_text()
    assert text.startswith("ohg 1\n# law lemma-2.2 failed; replay with:\n")
    assert text.split("\n", 3)[3] in err and "planted failure" in err
    seed = files[0].stem.rsplit("-", 1)[1]
    assert f"--seed {seed} {files[0]}" in text
    assert parse_ohg(text).m > 0
    code, out, _ = run("verify", "--law", "lemma-2.2", "--seed", seed, str(files[0]),
                       "--witness-dir", str(tmp_path / "again"))
    assert code == 3 and "FAIL planted failure" in out
    assert (tmp_path / "again" / files[0].name).read_text() == text.replace(
        str(tmp_path), str(tmp_path / "again"))


def test_entry_points():
    for cmd in ([sys.executable, "-m", "ohyper"], ["ohyper"]):
        proc = subprocess.run(cmd + ["info", P3], capture_output=True, text=True)
        assert proc.returncode == 0 and proc.stdout.startswith("vertices 3\n")
    proc = subprocess.run([sys.executable, "-m", "ohyper", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verify" in proc.stdout
