"""HTTP layer: routes, status codes, and the error envelope."""
from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from starclean import make_zn, ring_hash, ring_spec_dict
from starclean.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestMeta:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok" and "version" in body

    def test_constructor_catalog(self, client):
        resp = client.get("/constructors")
        assert resp.status_code == 200
        body = resp.json()
        assert {k["form"].split(":")[0] for k in body["kinds"]} == \
            {"zn", "product", "ri", "poly", "example"}
        assert body["examples"] == ["2.3", "boolean-like-8", "transpose-8",
                                    "triangular-z4"]


class TestClassifyRoute:
    def test_by_expression(self, client):
        resp = client.post("/classify", json={"construct": "zn:4"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["predicates"]["strongly_nil_star_clean"] is True
        assert body["ring"]["order"] == 4
        assert body["structure"]["projections"] == [0, 1]

    def test_by_spec_matches_expression(self, client):
        spec = ring_spec_dict(make_zn(4))
        by_spec = client.post("/classify", json={"spec": spec}).json()
        by_expr = client.post("/classify", json={"construct": "zn:4"}).json()
        assert by_spec == by_expr

    def test_requires_exactly_one_source(self, client):
        for payload in ({}, {"construct": "zn:4",
                             "spec": ring_spec_dict(make_zn(4))}):
            resp = client.post("/classify", json=payload)
            assert resp.status_code == 400
            assert resp.json()["error"]["kind"] == "bad-request"

    def test_constructor_error(self, client):
        resp = client.post("/classify", json={"construct": "wat:3"})
        assert resp.status_code == 400
        assert resp.json()["error"]["kind"] == "constructor-error"

    def test_cap_exceeded(self, client):
        resp = client.post("/classify", json={"construct": "zn:99999"})
        assert resp.status_code == 413
        assert resp.json()["error"]["kind"] == "cap-exceeded"

    def test_axiom_violation_carries_witnesses(self, client):
        spec = {"order": 2, "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]],
                "zero": 0, "one": 1, "involution": [0, 1]}
        resp = client.post("/classify", json={"spec": spec})
        assert resp.status_code == 422
        error = resp.json()["error"]
        assert error["kind"] == "axiom-violation"
        assert any(v["law"] == "mul-identity" for v in error["detail"])

    def test_malformed_spec_payload(self, client):
        resp = client.post("/classify", json={"spec": {"order": 2}})
        assert resp.status_code == 400
        assert resp.json()["error"]["kind"] == "bad-request"


class TestVerifyRoute:
    def test_recipe_corpus(self, client):
        resp = client.post("/verify", json={"recipe": ["zn:4", "zn:6"],
                                            "only": ["prop-2.2", "thm-2.4"]})
        assert resp.status_code == 200
        body = resp.json()
        assert body["summary"]["ok"] is True
        assert [c["id"] for c in body["checks"]] == ["prop-2.2", "thm-2.4"]
        assert body["summary"]["items"] == 4

    def test_explicit_ring_corpus(self, client):
        spec = ring_spec_dict(make_zn(4))
        resp = client.post("/verify", json={"rings": [spec], "only": ["lem-2.7"]})
        assert resp.status_code == 200
        body = resp.json()
        assert body["summary"]["items"] == 1
        assert body["corpus"][0]["provenance"].startswith("ring[0]:")

    def test_unknown_check_id(self, client):
        resp = client.post("/verify", json={"recipe": [], "only": ["thm-0.0"]})
        assert resp.status_code == 400
        assert "unknown check id" in resp.json()["error"]["message"]

    def test_bad_recipe_member(self, client):
        resp = client.post("/verify", json={"recipe": ["zn:bogus"]})
        assert resp.status_code == 400


class TestExtendRoute:
    def test_quadratic(self, client):
        resp = client.post("/extend", json={"construct": "zn:2", "mu": 1, "eta": 1})
        assert resp.status_code == 200
        body = resp.json()
        assert body["spec"]["order"] == 4
        assert len(body["hash"]) == 64

    def test_truncated_polynomial(self, client):
        resp = client.post("/extend", json={"construct": "zn:3", "degree": 2})
        assert resp.status_code == 200
        assert resp.json()["spec"]["order"] == 9

    def test_mode_exclusivity(self, client):
        resp = client.post("/extend", json={"construct": "zn:2", "mu": 1, "eta": 1,
                                            "degree": 2})
        assert resp.status_code == 400
        resp = client.post("/extend", json={"construct": "zn:2", "mu": 1})
        assert resp.status_code == 400
        resp = client.post("/extend", json={"construct": "zn:2"})
        assert resp.status_code == 400

    def test_precondition_error_on_noncommutative_base(self, client):
        resp = client.post("/extend", json={"construct": "example:transpose-8",
                                            "mu": 0, "eta": 0})
        assert resp.status_code == 400
        assert resp.json()["error"]["kind"] == "precondition-error"

    def test_extension_round_trips_through_classify(self, client):
        extended = client.post("/extend", json={"construct": "zn:2", "mu": 1,
                                                "eta": 1}).json()
        resp = client.post("/classify", json={"spec": extended["spec"]})
        assert resp.status_code == 200
        assert resp.json()["ring"]["hash"] == extended["hash"]


class TestIdealsRoute:
    def test_lattice_with_flags(self, client):
        resp = client.post("/ideals", json={"construct": "zn:12"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["count"] == 6
        maximal = [i for i in body["ideals"] if i["flags"].get("maximal")]
        assert sorted(m["members"] for m in maximal) == \
            [[0, 2, 4, 6, 8, 10], [0, 3, 6, 9]]

    def test_without_flags(self, client):
        resp = client.post("/ideals", json={"construct": "zn:12",
                                            "include_flags": False})
        assert all(i["flags"] == {} for i in resp.json()["ideals"])

    def test_cap(self, client):
        resp = client.post("/ideals", json={"construct": "product:zn:32,zn:32",
                                            "cap": 64})
        assert resp.status_code == 413


class TestResponseHashStability:
    def test_classify_response_is_deterministic(self, client):
        a = client.post("/classify", json={"construct": "example:triangular-z4"}).json()
        b = client.post("/classify", json={"construct": "example:triangular-z4"}).json()
        assert a == b
        assert a["ring"]["hash"] == ring_hash(__import__("starclean").build(
            "example:triangular-z4"))
