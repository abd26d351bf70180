import pytest
from fastapi.testclient import TestClient

from ordercore.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def make_session(client, **overrides):
    payload = {"edge_text": "1 2\n2 3\n3 1\n", "engine": "order"}
    payload.update(overrides)
    resp = client.post("/sessions", json=payload)
    assert resp.status_code == 201, resp.text
    return resp.json()


def test_create_session_reports_shape(client):
    info = make_session(client)
    assert info["n"] == 3 and info["m"] == 3 and info["max_core"] == 2


def test_create_from_edge_pairs(client):
    info = make_session(client, edge_text=None, edges=[[5, 6], [6, 7]])
    assert info["n"] == 3 and info["max_core"] == 1


def test_rejects_both_edge_sources(client):
    resp = client.post(
        "/sessions", json={"edge_text": "1 2\n", "edges": [[1, 2]]}
    )
    assert resp.status_code == 422


def test_insert_and_query_roundtrip(client):
    sid = make_session(client)["session_id"]
    resp = client.post(f"/sessions/{sid}/edges", json={"u": 1, "v": 4})
    body = resp.json()
    assert resp.status_code == 200
    assert body["direction"] == "insert" and body["vstar"] == [4]
    cores = client.get(f"/sessions/{sid}/cores").json()["cores"]
    assert cores == {"1": 2, "2": 2, "3": 2, "4": 1}
    one = client.get(f"/sessions/{sid}/cores/4").json()
    assert one == {"vertex": 4, "core": 1}


def test_closing_edge_promotes(client):
    sid = make_session(client, edge_text="1 2\n2 3\n")["session_id"]
    body = client.post(f"/sessions/{sid}/edges", json={"u": 1, "v": 3}).json()
    assert sorted(body["vstar"]) == [1, 2, 3]


def test_remove_edge_and_conflicts(client):
    sid = make_session(client)["session_id"]
    assert client.delete(f"/sessions/{sid}/edges/1/2").status_code == 200
    assert client.delete(f"/sessions/{sid}/edges/1/2").status_code == 409
    assert client.delete(f"/sessions/{sid}/edges/1/99").status_code == 404
    assert client.post(f"/sessions/{sid}/edges", json={"u": 2, "v": 3}).status_code == 409
    assert client.post(f"/sessions/{sid}/edges", json={"u": 4, "v": 4}).status_code == 400


def test_validate_endpoint(client):
    for engine in ("order", "traversal", "oracle"):
        sid = make_session(client, engine=engine)["session_id"]
        client.post(f"/sessions/{sid}/edges", json={"u": 1, "v": 4})
        body = client.get(f"/sessions/{sid}/validate").json()
        assert body["ok"] is True


def test_traversal_and_oracle_sessions_agree(client):
    results = {}
    for engine in ("order", "traversal", "oracle"):
        sid = make_session(client, engine=engine)["session_id"]
        client.post(f"/sessions/{sid}/edges", json={"u": 3, "v": 4})
        client.post(f"/sessions/{sid}/edges", json={"u": 1, "v": 4})
        results[engine] = client.get(f"/sessions/{sid}/cores").json()["cores"]
    assert results["order"] == results["traversal"] == results["oracle"]


def test_session_lifecycle(client):
    sid = make_session(client)["session_id"]
    assert client.get(f"/sessions/{sid}").status_code == 200
    assert client.delete(f"/sessions/{sid}").status_code == 204
    assert client.get(f"/sessions/{sid}").status_code == 404
    assert client.delete(f"/sessions/{sid}").status_code == 404
    assert client.get("/sessions/nope/cores").status_code == 404


def test_bad_edge_text_is_a_client_error(client):
    resp = client.post("/sessions", json={"edge_text": "1 2 3 4\n"})
    assert resp.status_code == 400
