"""HTTP surface: every endpoint with small instances via the test client."""

import pytest
from fastapi.testclient import TestClient

from soergel_forge import SCHEMA
from soergel_forge.service.app import app

client = TestClient(app)


def test_health():
    resp = client.get("/v1/health")
    assert resp.status_code == 200
    assert resp.json()["schema"] == SCHEMA


class TestRedwords:
    def test_parabolic(self):
        resp = client.post("/v1/redwords", json={"n": 2, "J": [1, 2]})
        assert resp.status_code == 200
        body = resp.json()
        assert body["schema"] == SCHEMA
        assert body["count"] == 2
        assert [1, 2, 1] in body["words"]

    def test_word_target(self):
        resp = client.post("/v1/redwords", json={"n": 3, "word": [1, 2, 1]})
        assert resp.json()["count"] == 2

    def test_requires_exactly_one_target(self):
        resp = client.post("/v1/redwords", json={"n": 2})
        assert resp.status_code == 422
        resp = client.post("/v1/redwords",
                           json={"n": 2, "J": [1], "word": [1]})
        assert resp.status_code == 422

    def test_rank_bound(self):
        resp = client.post("/v1/redwords", json={"n": 9, "J": [1]})
        assert resp.status_code == 422


class TestGraph:
    def test_json_graph(self):
        resp = client.post("/v1/graph", json={"n": 2, "J": [1, 2]})
        body = resp.json()
        assert body["graph"]["source"] == [1, 2, 1]
        assert body["graph"]["sink"] == [2, 1, 2]
        assert body["cycle_census"]["zamolodchikov"] == 0

    def test_dot_output(self):
        resp = client.post("/v1/graph", json={
            "n": 2, "J": [1, 2], "output_format": "dot"})
        assert resp.json()["dot"].startswith("digraph")

    def test_conflated(self):
        resp = client.post("/v1/graph", json={
            "n": 3, "J": [1, 2, 3], "conflated": True})
        assert len(resp.json()["graph"]["classes"]) == 8


class TestZmat:
    def test_pair(self):
        resp = client.post("/v1/zmat", json={"n": 2, "J": [1, 2]})
        body = resp.json()
        assert body["source"] == [1, 2, 1]
        assert body["target"] == [2, 1, 2]
        assert body["degree"] == 0
        assert len(body["matrix"]) == 8 and len(body["matrix"][0]) == 8


class TestVerify:
    def test_small_suite(self):
        resp = client.post("/v1/verify", json={
            "suite": "hecke", "config": {"n": 2, "seed": 1}})
        body = resp.json()
        assert body["status"] == "pass"
        assert body["checks"]

    def test_unknown_suite(self):
        resp = client.post("/v1/verify", json={"suite": "nope"})
        assert resp.status_code in (400, 422, 500)

    def test_budget_exceeded(self):
        resp = client.post("/v1/verify", json={
            "suite": "relations",
            "config": {"n": 4, "budget_seconds": 0.001}})
        assert resp.json()["status"] == "budget_exceeded"


class TestHomdim:
    def test_table(self):
        resp = client.post("/v1/homdim", json={
            "n": 2, "x": [1], "y": [1], "degree_lo": 0, "degree_hi": 2})
        body = resp.json()
        assert body["agree"] is True
        assert body["rows"][0] == {"degree": 0, "solved": 1, "predicted": 1}

    def test_word_out_of_range(self):
        resp = client.post("/v1/homdim", json={"n": 2, "x": [5], "y": []})
        assert resp.status_code == 422


class TestDualBasis:
    def test_singleton(self):
        resp = client.post("/v1/dualbasis", json={"n": 2, "J": [1]})
        rows = resp.json()["rows"]
        assert rows[0]["basis"] == "1"
        assert rows[1]["basis"] == "1*f1"
        assert rows[1]["dual"] == "1/2"
