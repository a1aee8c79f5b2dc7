import io
import textwrap

import pytest

from reidtrace import FreeAbelian, TwistedSetting, parse_torus, format_torus, parse_trace
from reidtrace.cli import EXIT_AXIOM, run, run_verify
from reidtrace.instances import parse_classes
from reidtrace.errors import ParseError


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def test_wedge_golden():
    status, out, _ = call("wedge", "--text", "x1 -> x1 x1 x1")
    assert status == 0
    assert out == "RT = -1[(0)] -1[(1)]\nL = -2\nN = 2 (exact)\n"


def test_wedge_budget_limited_report():
    status, out, _ = call("wedge", "--budget", "3", "--text", "x1 -> x2 x2 x1 X2;x2 -> x1 x2 x1")
    assert status == 0
    assert "N in [" in out and "(budget-limited)" in out


def test_torus_golden():
    status, out, _ = call("torus", "--text", "torus n=2;A = [[0,-1],[1,0]]")
    assert status == 0
    assert out == textwrap.dedent(
        """\
        RT = 1[(0,0)] +1[(0,1)]
        L = 2
        N = 2
        points (2 of 2):
          id  x          index  class
          0   (0,0)      +1     [(0,0)]
          1   (1/2,1/2)  +1     [(0,1)]
        """
    )


def test_coincidence_from_file(tmp_path):
    path = tmp_path / "coin.txt"
    path.write_text("# 2I against -I\ntorus n=2\nA = [[2,0],[0,2]]\nB = [[-1,0],[0,-1]]\n")
    status, out, _ = call("coincidence", "--input", str(path))
    assert status == 0
    lines = out.splitlines()
    assert lines[1:3] == ["L = 9", "N = 9"]
    assert len(parse_trace(lines[0][5:], parse_torus(path.read_text()).setting).terms) == 9


def test_classes_enumerate_and_pair():
    status, out, _ = call("classes", "--text", "classes abelian n=1;phi = [[3]]")
    assert out == "classes (2):\n  [(0)]\n  [(1)]\n"
    status, out, _ = call("classes", "--text", "classes abelian n=1;phi = [[3]];pair = (0) | (2)")
    assert status == 0 and out.startswith("verdict = EQUIVALENT\nwitness = (-1)\n")
    status, out, _ = call("classes", "--text", "classes abelian n=1;phi = [[3]]", "--pair", "(0)", "(1)")
    assert out.startswith("verdict = NOT_EQUIVALENT")


def test_classes_free_three_valued():
    text = "classes free n=2;phi x1 -> x2;phi x2 -> x1"
    assert call("classes", "--text", text, "--pair", "x1", "x2")[1].startswith("verdict = EQUIVALENT")
    assert call("classes", "--text", text, "--pair", "e", "x1")[1] == "verdict = NOT_EQUIVALENT\n"
    # x1 x2 and x2 x1 have equal abelianizations; nothing short enough relates them.
    assert call("classes", "--budget", "1", "--text", text, "--pair", "x1 x1", "x2 x2")[1].startswith("verdict = ")


def test_exit_codes():
    assert call("torus", "--text", "torus n=1;A = [[1]]")[0] == 1
    status, _, err = call("torus", "--text", "torus n=2;A = [[1,0],[0,2]];c = (1/2)")
    assert status == 2 and "line 3" in err and "c:" in err
    assert call("wedge", "--text", "x1 -> y")[0] == 2
    assert call("wedge")[0] == 2
    assert call("bogus")[0] == 2
    assert call("verify", "--trials", "0")[0] == 2
    assert call("torus", "--input", "/nonexistent/file")[0] == 2


def test_verify_exit_zero_and_deterministic():
    a = call("verify", "--trials", "5", "--seed", "2")
    b = call("verify", "--trials", "5", "--seed", "2")
    assert a == b and a[0] == 0
    assert a[1].splitlines()[-1] == "5/5 trials passed"


def test_verify_single_instance():
    status, out, _ = call("verify", "--text", "torus n=1;A = [[-2]];twist_f = (1)")
    assert status == 0 and out.splitlines()[-1] == "1/1 trials passed"


def test_axiom_failure_exit_code(monkeypatch):
    import reidtrace.cli as cli

    class Broken:
        results = {"additivity": False}
        details = {"additivity": "forced"}
        passed = False

    monkeypatch.setattr(cli, "verify_axioms", lambda t, seed=0: Broken())
    status, out, _ = call("verify", "--text", "torus n=1;A = [[3]]")
    assert status == EXIT_AXIOM and "FAIL" in out and "forced" in out


def test_torus_format_round_trip():
    t = parse_torus("torus n=2\nA = [[1,2],[3,4]]\nc = (1/2,0)\nB=[[0,1],[1,0]]\nd=(0,1/3)\ntwist_f=(1,-1)\ntwist_g=(0,2)\nregion = points 0,1\n")
    assert parse_torus(format_torus(t)) == t


@pytest.mark.parametrize(
    "text, line",
    [
        ("torus n=2\nA = [[1,0]]\n", 2),
        ("torus n=2\nA = [[1,0],[0,3]]\nregion = some\n", 3),
        ("torus n=2\nA = [[2,0],[0,3]]\nregion = points 7\n", 3),
        ("torus n=2\nA = [[1,0],[0,3]]\nA = [[1,0],[0,3]]\n", 3),
        ("torus n=1\nd = (0)\nA = [[2]]\n", 2),
        ("cube n=2\n", 1),
        ("torus n=2\nc = (0,0)\n", None),
    ],
)
def test_torus_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_torus(text)
    assert err.value.line == line


def test_classes_accepts_other_formats():
    s, pair = parse_classes("torus n=1\nA = [[3]]\n")
    assert s == TwistedSetting.from_matrices([[3]], [[1]]) and pair is None
    s, _ = parse_classes("x1 -> x1 x1\n")
    assert s.codomain.rank == 1
    with pytest.raises(ParseError) as err:
        parse_classes("classes free n=2\nphi x1 -> x1\n")
    assert "x2" in str(err.value)
