from pathlib import Path

from click.testing import CliRunner

from virtcone.cli import main


CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def invoke(*args, **kw):
    return CliRunner().invoke(main, list(args), **kw)


def test_runs_a_corpus_file():
    res = invoke(str(CORPUS / "doublepoint.vc"))
    assert res.exit_code == 0
    assert "vclass(X, E) = 4*H^2" in res.output


def test_reads_stdin_by_default():
    res = invoke(input="ambient P2 [x, y, z];\n"
                       "print residual((1 + 4*H)^5, (1 + 2*H)^6, (1 + H)^3);\n")
    assert res.exit_code == 0
    assert "= 31" in res.output


def test_machine_format_deterministic():
    args = [str(CORPUS / "twistedcubic.vc"), "--format", "machine",
            "--seed", "3"]
    a = invoke(*args)
    b = invoke(*args)
    assert a.exit_code == 0
    assert a.output == b.output
    assert "seed 3" in a.output
    assert "ints 1 2 1 0" in a.output
    assert "class 3 0 0 0 8" in a.output


def test_parse_error_exits_2():
    res = invoke(input="print segre(X);")
    assert res.exit_code == 2
    assert "parse error" in res.output


def test_engine_error_exits_1():
    res = invoke(input="ambient P2 [x, y, z]; let X = scheme (x^2, x*y); "
                       "print vclass(X, twists(3, 3));")
    assert res.exit_code == 1
    assert "error" in res.output


def test_attest_containment_flag():
    src = ("ambient P2 [x, y, z]; let X = scheme (x^2, x*y); "
           "print vclass(X, twists(3, 3));")
    res = invoke("--attest-containment", input=src)
    assert res.exit_code == 0
    assert "= 6*H^2" in res.output


def test_no_saturate_changes_flat_limits():
    src = ("ambient A2 [x, y];\n"
           "let F = family (t*y) param t;\n"
           "print flatlimit(F);\n")
    flat = invoke(input=src)
    assert flat.exit_code == 0 and "(y)" in flat.output
    naive = invoke("--no-saturate", input=src)
    assert naive.exit_code == 0 and "()" in naive.output
