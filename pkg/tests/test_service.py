"""HTTP facade: every endpoint against the in-process test client."""

import json

import pytest
from fastapi.testclient import TestClient

from unitmzv import __version__
from unitmzv.cli import run
from unitmzv.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


def test_decompose_levels(client):
    resp = client.post("/decompose", json={"N": 2, "eps": [1, 1, 1]})
    assert resp.status_code == 200
    assert resp.json() == {"N": 2, "r": 3, "c": "-1/6"}
    resp = client.post("/decompose", json={"N": 4, "eps": [1, 1]})
    assert resp.json() == {"N": 4, "r": 2, "a": "1/2", "b": "0"}


def test_decompose_matches_cli_json(client):
    # the service and the CLI must serialize the same object
    for n, eps in ((2, "1,1"), (3, "1,2"), (4, "3,2,1")):
        cli_obj = json.loads(run(["decompose", "--N", str(n), "--eps", eps, "--json"]).output)
        srv_obj = client.post(
            "/decompose", json={"N": n, "eps": [int(t) for t in eps.split(",")]}
        ).json()
        assert cli_obj == srv_obj


def test_shuffle_regularize_derive_dual(client):
    resp = client.post("/shuffle", json={"N": 2, "w1": "1", "w2": "0"})
    assert resp.json() == {
        "N": 2,
        "terms": [{"word": "1,0", "coeff": "1"}, {"word": "0,1", "coeff": "1"}],
        "text": "1,0 + 0,1",
    }
    resp = client.post("/regularize", json={"N": 2, "word": "1,0"})
    assert resp.json()["text"] == "-0,1"
    resp = client.post("/derive", json={"N": 2, "word": "1,0,1", "times": 2})
    assert resp.json()["terms"] == [{"word": "1", "coeff": "1"}]
    resp = client.post("/dual", json={"N": 2, "weight": 3, "word": "1,x,x,1"})
    assert resp.json()["terms"] == [{"word": "1", "coeff": "-3"}]


def test_word_index_endpoints(client):
    resp = client.post("/word-of-zeta", json={"N": 2, "ks": [3, 1], "eps": [0, 1]})
    assert resp.json() == {"word": "1,x,x,1", "weight": 4, "depth": 2, "convergent": True}
    resp = client.post("/zeta-of-word", json={"N": 2, "word": "1,x,x,1"})
    assert resp.json() == {
        "N": 2,
        "ks": [3, 1],
        "eps": [0, 1],
        "convergent": True,
        "text": "ks=3,1; eps=0,1",
    }


def test_eval_endpoint(client):
    resp = client.post(
        "/eval", json={"N": 2, "ks": [2], "eps": [1], "terms": 5000, "accel": 6}
    )
    data = resp.json()
    assert abs(data["re"] + 0.8224670334241132) < 1e-9
    assert data["err"] < 1e-9


def test_table_endpoint(client):
    resp = client.post("/table", json={"N": 3, "r": 1})
    data = resp.json()
    assert data["N"] == 3 and data["r"] == 1 and len(data["rows"]) == 3
    assert data["rows"][1] == {
        "N": 3,
        "r": 1,
        "eps": [1],
        "word": "2",
        "beta_plus": "1",
        "beta_minus": "0",
        "a": "-1",
        "b": "0",
    }


def test_fixture_endpoints(client):
    names = {f["name"] for f in client.get("/fixtures").json()["fixtures"]}
    assert names == {"n2-w2-mm", "n2-w3-mmm", "n3-w2-ee", "n4-w2-ii", "n4-w2-im"}
    resp = client.post("/fixtures/check", json={"name": "n2-w2-mm", "terms": 20000})
    data = resp.json()
    assert data["pass"] is True
    assert data["residual"] < data["tolerance"]


def test_derivation_matrix_endpoint(client):
    body = {"N": 2, "weight": 1, "source_weight": 2, "source_depth": 2}
    data = client.post("/derivation-matrix", json=body).json()
    assert data["rows"] == ["1,1", "1,0", "0,1", "0,0"]
    assert data["entries"][1] == ["-1", "1"]
    csv_data = client.post("/derivation-matrix", json=dict(body, format="csv")).json()
    assert csv_data["csv"].startswith("word,1,0")


def test_selftest_endpoint(client):
    resp = client.post("/selftest", json={"max_weight": 1})
    data = resp.json()
    assert data["passed"] is True
    assert len(data["criteria"]) == 10
    assert {c["name"] for c in data["criteria"]} >= {"c01-canonical-values"}


def test_domain_errors_are_400(client):
    assert client.post("/eval", json={"N": 2, "ks": [1], "eps": [0]}).status_code == 400
    assert client.post("/regularize", json={"N": 2, "word": "x,1"}).status_code == 400
    assert client.post("/decompose", json={"N": 5, "eps": [1]}).status_code == 400
    assert client.post("/fixtures/check", json={"name": "nope"}).status_code == 400
    detail = client.post("/decompose", json={"N": 5, "eps": [1]}).json()["detail"]
    assert "modulus" in detail


def test_malformed_requests_are_422(client):
    assert client.post("/decompose", json={"N": 2}).status_code == 422
    assert client.post("/shuffle", json={"N": 2, "w1": "1"}).status_code == 422
