import pytest
from fastapi.testclient import TestClient

from wulab.drawing import drawing_to_dict, drawing_from_dict
from wulab.constructions import base_drawing
from wulab.invariants import check_theorems, invariant_profile
from wulab.service import app


@pytest.fixture
def client():
    return TestClient(app)


def triangle_json():
    return drawing_to_dict(base_drawing("triangle_center_k4"))


def square_json():
    return drawing_to_dict(base_drawing("square_diagonals_k4"))


def test_validate_endpoint_matches_library(client):
    resp = client.post("/api/validate", json={"drawing": square_json()})
    assert resp.status_code == 200
    data = resp.json()
    assert not data["almost_embedding"]
    assert data["violations"][0]["edges"] == ["1-3", "2-4"]


def test_validate_bad_schema(client):
    resp = client.post("/api/validate", json={"drawing": {"graph": {"kind": "k4"}}})
    assert resp.status_code == 400


def test_invariants_endpoint_golden(client):
    body = {"drawing": triangle_json(), "cycles": [["1", "2", "3"]]}
    resp = client.post("/api/invariants", json=body)
    assert resp.status_code == 200
    data = resp.json()
    d = base_drawing("triangle_center_k4")
    from wulab.drawing import CycleSpec

    expected_profile = invariant_profile(d, [CycleSpec(["1", "2", "3"])]).to_dict()
    expected_theorems = check_theorems(d).to_dict()
    assert data["profile"] == expected_profile
    assert data["theorems"] == expected_theorems


def test_finger_move_auto_routed(client):
    body = {
        "drawing": square_json(),
        "edge": ["2", "4"],
        "target_vertex": "1",
        "mode": "map",
    }
    resp = client.post("/api/finger-move", json=body)
    assert resp.status_code == 200
    moved = drawing_from_dict(resp.json()["drawing"])
    from wulab.invariants import k4_profile

    prof = k4_profile(moved)
    assert prof[0] in (-1, 1) and prof[1:] == (0, 0, 0)


def test_finger_move_obstruction_is_422(client):
    body = {
        "drawing": square_json(),
        "edge": ["2", "4"],
        "target_vertex": "1",
        "mode": "preserve",  # impossible: must cross the other diagonal
    }
    resp = client.post("/api/finger-move", json=body)
    assert resp.status_code == 422
    assert "loop" in resp.json()["detail"] or "budget" in resp.json()["detail"]


def test_examples_endpoint(client):
    resp = client.get("/api/examples/ae_k4_w123_4", params={"n": 2})
    assert resp.status_code == 200
    data = resp.json()
    assert data["claims"] == {"w_123_4": 2}
    resp = client.get("/api/examples/unknown_family")
    assert resp.status_code == 404
    resp = client.get("/api/examples/ae_k4_windings", params={"n1": 0, "n2": 0, "n3": 0, "n4": 0})
    assert resp.status_code == 422


def test_base_and_figures_endpoints(client):
    assert client.get("/api/base/triangle_center_k4").status_code == 200
    assert client.get("/api/base/nonagon").status_code == 404
    resp = client.get("/api/figures/fig_8_4")
    assert resp.status_code == 200
    assert "drawing" in resp.json()
    resp = client.get("/api/figures/fig_8_6_left")
    assert resp.status_code == 200
    assert "triod" in resp.json()


def test_session_undo_redo_roundtrip(client):
    sid = client.post("/api/session").json()["id"]
    d1, d2 = triangle_json(), square_json()
    assert client.put(f"/api/session/{sid}/drawing/main", json={"drawing": d1}).status_code == 200
    assert client.put(f"/api/session/{sid}/drawing/main", json={"drawing": d2}).status_code == 200
    got = client.get(f"/api/session/{sid}/drawing/main").json()
    assert got["drawing"] == d2 and got["depth"] == 2
    undone = client.post(f"/api/session/{sid}/undo", params={"name": "main"}).json()
    assert undone["drawing"] == d1
    redone = client.post(f"/api/session/{sid}/redo", params={"name": "main"}).json()
    assert redone["drawing"] == d2  # exact round-trip, rational strings equal
    # redo stack exhausted
    assert client.post(f"/api/session/{sid}/redo", params={"name": "main"}).status_code == 422


def test_session_unknown(client):
    assert client.get("/api/session/nope/drawing/main").status_code == 404
