import pytest
from fastapi.testclient import TestClient

from app import app
from tests.conftest import RECOMB_4096_B, WINNER_LISTING, WINNER_NAME


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json() == {"status": "healthy"}


def test_decode(client):
    response = client.post("/api/v1/decode", json={"name": WINNER_NAME})
    assert response.status_code == 200
    result = response.json()["result"]
    assert result["name"] == WINNER_NAME
    assert len(result["rules"]) == 9
    assert result["rules"][0] == {
        "index": 0, "code": 11, "state": 0, "read": 0, "next_state": 1, "write": 1, "move": "RIGHT",
    }
    assert result["listing"] == WINNER_LISTING


def test_decode_error_reports_position(client):
    response = client.post("/api/v1/decode", json={"name": "(2, 0, 11, 0, 3)"})
    assert response.status_code == 400
    assert response.json()["position"] == 4


def test_encode(client):
    response = client.post("/api/v1/encode", json={"rules": WINNER_LISTING})
    assert response.json()["result"]["name"] == WINNER_NAME


def test_encode_error_reports_line(client):
    response = client.post("/api/v1/encode", json={"rules": "(0, 0)->(1, 1, 2)\nnot a rule"})
    assert response.status_code == 400
    assert response.json()["line"] == 2


def test_run(client):
    response = client.post("/api/v1/run", json={"name": "row:8", "step_limit": 1_000_000, "rado": True})
    result = response.json()["result"]
    assert result["outcome"]["status"] == "halted"
    assert (result["outcome"]["ones"], result["outcome"]["steps"]) == (501, 134_466)
    assert result["mpp_class"] == "M_PP(501)"
    assert result["rado"] == {"rado_steps": 134_467, "rado_ones": 502}


def test_run_past_the_cap(client):
    result = client.post("/api/v1/run", json={"name": "(1, 0, 5)", "step_limit": 50}).json()["result"]
    assert result["outcome"]["status"] == "step_limit_exceeded"
    assert result["outcome"]["ones"] is None
    assert "mpp_class" not in result


def test_run_unknown_id(client):
    assert client.post("/api/v1/run", json={"name": "row:99"}).status_code == 404


def test_recombine(client):
    response = client.post("/api/v1/recombine", json={"sources": ["row:5", "row:2", "row:1"], "cuts": "7,9"})
    result = response.json()["result"]
    assert result["name"] == RECOMB_4096_B
    assert result["provenance"] == [0, 0, 0, 0, 0, 0, 0, 1, 1, 2]


def test_recombine_bad_cuts(client):
    response = client.post("/api/v1/recombine", json={"sources": ["row:5", "row:2"], "cuts": [9, 3]})
    assert response.status_code == 400


def test_lineage(client):
    lineage = "[recomb cuts=(9) [recomb cuts=(7) [row:5] [row:2]] [row:1]]"
    result = client.post("/api/v1/lineage", json={"lineage": lineage}).json()["result"]
    assert result["name"] == RECOMB_4096_B
    assert result["lineage"] == lineage


def test_lineage_error(client):
    assert client.post("/api/v1/lineage", json={"lineage": "[recomb cuts=(7) [row:5]]"}).status_code == 400


def test_catalog(client):
    assert len(client.get("/api/v1/catalog").json()["result"]) == 14
    golden = client.get("/api/v1/catalog", params={"golden": True}).json()["result"]
    assert len(golden) == 22


def test_search(client):
    body = {"pool": "golden", "select": "r20.a,r20.b", "k": 2, "step_limit": 10_000}
    result = client.post("/api/v1/search", json=body).json()["result"]
    assert result["summary"]["enumerated"] == 40
    assert len(result["records"]) == result["summary"]["kept"]


def test_verify(client):
    body = client.post("/api/v1/verify", json={"cap": 1000}).json()
    assert body["ok"] is False
    assert body["failed"] >= 9


def test_verify_builtin_with_other_state_count(client):
    response = client.post("/api/v1/verify", json={"cap": 1000, "states": 3})
    assert response.status_code == 404
    assert "5-state" in response.json()["details"]
