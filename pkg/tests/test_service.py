import warnings

import pytest

from slicetree import PrunedTree, canonical_key, prune
from slicetree.serial import tree_to_obj
from slicetree.service import create_app

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(), raise_server_exceptions=False)


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_validate_ok(client, example7):
    r = client.post(
        "/api/validate",
        json={"tree": tree_to_obj(PrunedTree.bare(example7)), "target": "sliced"},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    assert body["tsm_stable"] is True
    assert body["pruned_stable"] is False
    assert body["height"] == "6"
    assert body["sum_weights"] == "4"


def test_validate_reports_violations(client):
    bad = {
        "vertices": [
            {"id": "a", "jdeg": "1/2", "klt": [], "lc": 0},
            {"id": "b", "jdeg": "1/2", "klt": [], "lc": 0},
        ],
        "edges": [{"u": "a", "v": "b", "slicing": None}],
    }
    r = client.post("/api/validate", json={"tree": bad})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is False
    assert any(v["clause"] == "integrality" for v in body["violations"])


def test_malformed_tree_is_400(client):
    r = client.post(
        "/api/validate",
        json={"tree": {"vertices": [{"id": "a"}], "edges": []}},
    )
    assert r.status_code == 400
    assert r.json()["error"] == "InvalidTree"


def test_prune_endpoint(client, example7):
    r = client.post(
        "/api/prune",
        json={"tree": tree_to_obj(PrunedTree.bare(example7)), "policy": "id"},
    )
    assert r.status_code == 200
    body = r.json()
    assert [e["removed"] for e in body["events"]] == ["a", "c"]
    assert sorted(v["id"] for v in body["final"]["vertices"]) == ["b", "d", "f", "h"]
    assert body["final_key"] == canonical_key(prune(example7).final)


def test_prune_explicit_order(client, example7):
    r = client.post(
        "/api/prune",
        json={"tree": tree_to_obj(PrunedTree.bare(example7)), "order": ["c", "a"]},
    )
    assert r.status_code == 200
    assert [e["removed"] for e in r.json()["events"]] == ["c", "a"]


def test_prune_domain_error(client):
    two = {
        "vertices": [
            {"id": "a", "jdeg": "1", "klt": [], "lc": 0},
            {"id": "b", "jdeg": "1", "klt": [], "lc": 0},
        ],
        "edges": [{"u": "a", "v": "b", "slicing": None}],
    }
    r = client.post("/api/prune", json={"tree": two})
    assert r.status_code == 400
    assert r.json()["error"] == "NonPositiveTotalWeight"


def test_enumerate_endpoint(client):
    r = client.post("/api/enumerate", json={"height": 1, "target": "sliced"})
    assert r.status_code == 200
    body = r.json()
    assert body["cap_exceeded"] is False
    assert body["census"]["complete"] is True
    assert body["census"]["count"] == len(body["census"]["entries"])


def test_enumerate_cap(client):
    r = client.post(
        "/api/enumerate",
        json={"height": 3, "target": "pruned", "max_entries": 50},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["cap_exceeded"] is True
    assert body["census"]["complete"] is False
    assert body["census"]["count"] == 50


def test_classify_endpoint(client):
    profile = {
        "n": 3,
        "points": [
            {"label": "p", "ordA": 4, "ordB": 6, "ordDelta": 12},
            {"label": "q", "ordA": 3, "ordB": 4, "ordDelta": 8},
        ],
    }
    r = client.post("/api/classify", json={"profile": profile})
    assert r.status_code == 200
    body = r.json()
    assert body["strictly_lc_count"] == 1
    assert body["minimal_profile"]["n"] == 2
    by_label = {p["label"]: p for p in body["points"]}
    assert by_label["q"]["kodaira"] == "IV*"


def test_classify_non_lc(client):
    profile = {"n": 3, "points": [{"label": "p", "ordA": 5, "ordB": 7}]}
    r = client.post("/api/classify", json={"profile": profile})
    assert r.status_code == 200
    body = r.json()
    assert body["minimal_profile"] is None
    assert "non-lc" in body["not_lc_reason"]


def test_formulas_endpoint(client):
    r = client.get("/api/formulas", params={"n": 3})
    assert r.json() == {
        "n": 3,
        "window": "(0,1/3)",
        "ksb_volume": "1/3",
        "dimension": 28,
        "eps": None,
        "c_eps": None,
        "v_eps": None,
    }
    r = client.get("/api/formulas", params={"n": 3, "eps": "1/12"})
    body = r.json()
    assert body["c_eps"] == "1/4"
    assert body["v_eps"] == "5/16"


def test_formulas_domain_error(client):
    r = client.get("/api/formulas", params={"n": 2})
    assert r.status_code == 400
    assert r.json()["error"] == "HeightTooSmall"


def test_export_dot_endpoint(client, example7):
    r = client.post(
        "/api/export/dot",
        json={"tree": tree_to_obj(PrunedTree.bare(example7)), "name": "ex7"},
    )
    assert r.status_code == 200
    dot = r.json()["dot"]
    assert dot.startswith('graph "ex7" {')
    assert dot.count(" -- ") == 5
