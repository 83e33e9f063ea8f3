"""Workbench HTTP contract: sessions, moves, undo, suggestions, traces."""

import pytest
from fastapi.testclient import TestClient

import spglab as sl
from spglab.api import create_app
from spglab.spgjson import dumps, spg_to_document


@pytest.fixture()
def client():
    return TestClient(create_app())


def new_spindle_session(client, m=2):
    response = client.post("/sessions", json={
        "source": {"kind": "generator", "name": "spindle", "params": {"m": m}}})
    assert response.status_code == 201
    return response.json()


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_create_spindle_session_badges(client):
    payload = new_spindle_session(client)
    assert payload["diameter"]["value"] == 8
    report = payload["report"]
    assert report["dimension-reduction"]["holds"] is False
    for name in ("strong-adjacency", "endpoint-count", "one-subset", "spindle"):
        assert report[name]["holds"] is True, name
    assert len(payload["graph"]["vertices"]) == 9

    fresh = client.get(f"/sessions/{payload['id']}")
    assert fresh.status_code == 200
    assert fresh.json() == payload


def test_upload_session_and_moves(client):
    doc = spg_to_document(sl.gen_figure1())
    created = client.post("/sessions", json={
        "source": {"kind": "upload", "document": doc}}).json()
    sid = created["id"]

    moved = client.post(f"/sessions/{sid}/moves", json={
        "kind": "contract", "endpoints": [0, 1]})
    assert moved.status_code == 200
    assert len(moved.json()["graph"]["vertices"]) == 5
    assert moved.json() == client.get(f"/sessions/{sid}").json()


def test_illegal_moves_conflict(client):
    payload = new_spindle_session(client)
    sid = payload["id"]

    response = client.post(f"/sessions/{sid}/moves", json={
        "kind": "contract", "endpoints": [0, 5]})
    assert response.status_code == 409
    assert response.json()["detail"]["error"] == "NoSuchEdge"

    response = client.post(f"/sessions/{sid}/moves", json={
        "kind": "addEdge", "endpoints": [0, 1]})
    assert response.status_code == 409
    assert response.json()["detail"]["error"] == "EdgeExists"

    # an index that no longer exists after a contraction
    client.post(f"/sessions/{sid}/moves", json={"kind": "contract",
                                                "endpoints": [0, 1]})
    response = client.post(f"/sessions/{sid}/moves", json={
        "kind": "addEdge", "endpoints": [0, 8]})
    assert response.status_code == 409
    assert response.json()["detail"]["error"] == "BadEdge"


def test_undo_restores_bytes(client):
    payload = new_spindle_session(client)
    sid = payload["id"]
    original = dumps(payload["graph"])

    client.post(f"/sessions/{sid}/moves", json={"kind": "addEdge",
                                                "endpoints": [0, 8]})
    undone = client.post(f"/sessions/{sid}/undo")
    assert undone.status_code == 200
    assert dumps(undone.json()["graph"]) == original

    empty = client.post(f"/sessions/{sid}/undo")
    assert empty.status_code == 409


def test_restrict_view(client):
    payload = new_spindle_session(client)
    sid = payload["id"]
    view = client.get(f"/sessions/{sid}/restrict", params={"face": "1,2"}).json()
    assert view["connected"] is False
    assert len(view["components"]) == 2

    assert client.get(f"/sessions/{sid}/restrict",
                      params={"face": "0,zebra"}).status_code == 400


def test_suggestions_and_apply(client):
    payload = new_spindle_session(client)
    sid = payload["id"]
    suggestions = client.get(f"/sessions/{sid}/suggestions").json()["suggestions"]
    assert suggestions
    assert suggestions[0]["property"] == "dimension-reduction"
    diameters = [s["diameter"] for s in suggestions]
    assert diameters == sorted(diameters, reverse=True)

    best = suggestions[0]
    moved = client.post(f"/sessions/{sid}/moves", json={
        "kind": best["kind"], "endpoints": best["endpoints"]}).json()
    assert moved["diameter"]["value"] == best["diameter"]
    assert moved == client.get(f"/sessions/{sid}").json()


def test_trace_replayable(client):
    payload = new_spindle_session(client)
    sid = payload["id"]
    for move in ({"kind": "addEdge", "endpoints": [0, 8]},
                 {"kind": "contract", "endpoints": [3, 4]}):
        assert client.post(f"/sessions/{sid}/moves", json=move).status_code == 200

    trace = client.get(f"/sessions/{sid}/trace").json()
    assert len(trace["moves"]) == 2
    g = sl.make_spg(payload["graph"]["n"], payload["graph"]["d"],
                    payload["graph"]["vertices"], payload["graph"]["edges"])
    from spglab.spgjson import document_to_moves, parse
    for move in document_to_moves(trace):
        g = sl.apply_move(g, move)
    assert g.vertices == parse(trace["final"]).vertices
    assert g.edges == parse(trace["final"]).edges


def test_errors_404_and_400(client):
    assert client.get("/sessions/nope").status_code == 404
    assert client.post("/sessions/nope/moves", json={
        "kind": "contract", "endpoints": [0, 1]}).status_code == 404

    response = client.post("/sessions", json={"source": {"kind": "generator",
                                                         "name": "mystery"}})
    assert response.status_code == 400

    response = client.post("/sessions", json={"source": {"kind": "generator",
                                                         "name": "spindle"}})
    assert response.status_code == 400  # missing m

    response = client.post("/sessions", json={"source": {"kind": "upload",
                                                         "document": {"nope": 1}}})
    assert response.status_code == 400

    response = client.post("/sessions", json={"wrong": "shape"})
    assert response.status_code == 400


def test_generator_sources(client):
    for source in ({"kind": "generator", "name": "cube", "params": {"dim": 3}},
                   {"kind": "generator", "name": "hirsch-path",
                    "params": {"n": 6, "d": 2}},
                   {"kind": "generator", "name": "figure1"}):
        response = client.post("/sessions", json={"source": source})
        assert response.status_code == 201, source
