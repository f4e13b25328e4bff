import json

import pytest
from fastapi.testclient import TestClient

import bondlekit as bk
from bondlekit.service.app import create_app

from conftest import FIXTURES


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def fixture_json(name: str) -> dict:
    return json.loads((FIXTURES / name).read_text())


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


class TestHealth:
    def test_health(self, client):
        doc = client.get("/health").json()
        assert doc["status"] == "ok"
        assert doc["version"] == bk.__version__


class TestCheck:
    def test_affine_params_pass(self, client):
        r = client.post("/check", json={"affine": {"n": 15, "a": 4, "b": 3, "m": 6}})
        assert r.status_code == 200
        doc = r.json()
        assert doc["level"] == "bondle"
        assert doc["report"]["passed"] is True
        assert doc["bondle"]["affine"] == {"a": 4, "b": 3, "m": 6}

    def test_explicit_tables(self, client):
        r = client.post("/check", json={"bondle": fixture_json("p_bondle.json")})
        assert r.status_code == 200
        assert r.json()["level"] == "singquandle"  # no r3 table

    def test_level_override(self, client):
        r = client.post(
            "/check",
            json={"affine": {"n": 15, "a": 4, "b": 3, "m": 6}, "level": "quandle"},
        )
        assert r.json()["level"] == "quandle"

    def test_invalid_m_is_422(self, client):
        r = client.post("/check", json={"affine": {"n": 15, "a": 4, "b": 3, "m": 7}})
        assert r.status_code == 422
        assert "divisibility" in r.json()["detail"]

    def test_requires_exactly_one_source(self, client):
        assert client.post("/check", json={}).status_code == 422
        both = {
            "affine": {"n": 15, "a": 4, "b": 3, "m": 6},
            "bondle": fixture_json("p_bondle.json"),
        }
        assert client.post("/check", json=both).status_code == 422


class TestWeightsCheck:
    def test_valid(self, client):
        r = client.post(
            "/weights/check",
            json={
                "bondle": fixture_json("ex1_bondle.json"),
                "weights": fixture_json("ex1_weights.json"),
            },
        )
        assert r.status_code == 200
        assert r.json()["report"]["passed"] is True


class TestColor:
    def test_count_both_engines(self, client):
        r = client.post(
            "/color",
            json={
                "diagram": fixture_text("P1.bgc"),
                "bondle": fixture_json("ex1_bondle.json"),
                "engine": "both",
            },
        )
        assert r.status_code == 200
        doc = r.json()
        assert doc["count"] == 45
        assert {e["engine"] for e in doc["engines"]} == {"backtrack", "affine"}
        assert all(e["count"] == 45 for e in doc["engines"])

    def test_enumerate_with_limit(self, client):
        r = client.post(
            "/color",
            json={
                "diagram": fixture_text("P1.bgc"),
                "bondle": fixture_json("ex1_bondle.json"),
                "enumerate": True,
                "limit": 10,
            },
        )
        doc = r.json()
        assert doc["count"] == 45
        assert len(doc["colorings"]) == 10
        assert doc["truncated"] is True

    def test_bad_diagram_is_422(self, client):
        r = client.post(
            "/color",
            json={"diagram": "U9+", "bondle": fixture_json("ex1_bondle.json")},
        )
        assert r.status_code == 422
        assert "dangling" in r.json()["detail"]


class TestStateSum:
    def test_example_two(self, client):
        r = client.post(
            "/statesum",
            json={
                "diagram": fixture_text("P4.bgc"),
                "bondle": fixture_json("ex2_bondle.json"),
                "weights": fixture_json("ex2_weights.json"),
            },
        )
        assert r.status_code == 200
        doc = r.json()
        assert doc["rendered"] == "75u^2"
        assert doc["colorings"] == 75
        assert sum(doc["coeffs"]) == doc["colorings"]


class TestCluster:
    def test_example_one_pair(self, client):
        r = client.post(
            "/cluster",
            json={
                "diagrams": {"P1": fixture_text("P1.bgc"), "P2": fixture_text("P2.bgc")},
                "bondle": fixture_json("ex1_bondle.json"),
                "weights": fixture_json("ex1_weights.json"),
            },
        )
        assert r.status_code == 200
        doc = r.json()
        assert doc["stage1"] == {"45": ["P1", "P2"]}
        assert doc["stage2"] == {"45|45u": ["P1"], "45|45u^3": ["P2"]}
        assert doc["distinguished_pairs"] == [["P1", "P2"]]


class TestMoves:
    def test_invariance(self, client):
        r = client.post(
            "/moves",
            json={
                "diagram": fixture_text("P3.bgc"),
                "bondle": fixture_json("ex2_bondle.json"),
                "weights": fixture_json("ex2_weights.json"),
                "moves": 10,
                "seed": 3,
            },
        )
        assert r.status_code == 200
        doc = r.json()
        assert doc["applied"] == 10
        assert doc["count"] == 75
        assert doc["rendered"] == "75"
        assert doc["invariant"] is True
        assert doc["failures"] == []

    def test_deterministic_seed(self, client):
        payload = {
            "diagram": fixture_text("P.bgc"),
            "bondle": fixture_json("p_bondle.json"),
            "moves": 5,
            "seed": 11,
        }
        assert client.post("/moves", json=payload).json() == client.post(
            "/moves", json=payload
        ).json()


class TestSearch:
    def test_bondles(self, client):
        r = client.post("/search/bondles", json={"n": 15})
        assert r.status_code == 200
        doc = r.json()
        assert len(doc["triples"]) == 240
        assert doc["checked"] == 1800
        assert all(t["m"] in (6, 10) for t in doc["triples"])

    def test_weights_budget(self, client):
        r = client.post(
            "/search/weights",
            json={"bondle": fixture_json("ex1_bondle.json"), "m": 2, "budget": 4},
        )
        assert r.status_code == 200
        doc = r.json()
        assert doc["truncated"] is True
        assert len(doc["solutions"]) == 4  # the four constant pairs come first
        assert all(s["constant"] is not None for s in doc["solutions"])
