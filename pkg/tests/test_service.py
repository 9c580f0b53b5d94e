from pathlib import Path

from fastapi.testclient import TestClient

from virtcone.service import app


CORPUS = Path(__file__).resolve().parent.parent / "corpus"
client = TestClient(app)


def test_health():
    res = client.get("/health")
    assert res.status_code == 200
    assert res.json() == {"status": "ok"}


def test_run_corpus_script():
    src = (CORPUS / "doublepoint.vc").read_text()
    res = client.post("/run", json={"source": src, "seed": 0})
    assert res.status_code == 200
    body = res.json()
    assert body["exit_code"] == 0 and body["error"] is None
    by_echo = {r["directive"]: r for r in body["records"]}
    assert by_echo["vclass(X, E)"]["payload"] == ["0", "0", "4"]
    assert by_echo["degrees(X)"]["payload"] == ["1", "1", "0"]
    assert body["output"].startswith("virtcone 1\nseed 0\n")


def test_run_output_matches_in_process_machine_format():
    from virtcone.context import Context
    from virtcone.lang import parse
    from virtcone.runner import format_machine, run

    src = (CORPUS / "planeline.vc").read_text()
    ctx = Context(seed=5, redraws=2)
    local = format_machine(run(parse(src), ctx), ctx)
    res = client.post("/run", json={"source": src, "seed": 5, "redraws": 2})
    assert res.json()["output"] == local


def test_parse_error_reported_with_exit_code_2():
    res = client.post("/run", json={"source": "print segre(X);"})
    assert res.status_code == 200
    body = res.json()
    assert body["exit_code"] == 2
    assert "parse error" in body["error"]
    assert body["records"] == []


def test_engine_error_reported_with_exit_code_1():
    src = ("ambient P2 [x, y, z]; let X = scheme (x^2, x*y); "
           "print vclass(X, twists(3, 3));")
    res = client.post("/run", json={"source": src})
    body = res.json()
    assert body["exit_code"] == 1
    assert "vclass(X, twists(3, 3))" in body["error"]


def test_request_options_are_honored():
    src = ("ambient P2 [x, y, z]; let X = scheme (x^2, x*y); "
           "print vclass(X, twists(3, 3));")
    res = client.post("/run", json={"source": src, "attest_containment": True,
                                    "format": "human"})
    body = res.json()
    assert body["exit_code"] == 0
    assert "= 6*H^2" in body["output"]
