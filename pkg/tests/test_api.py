import json
from pathlib import Path

from fastapi.testclient import TestClient

from curveorbits.api import app

client = TestClient(app)
REPO_ROOT = Path(__file__).resolve().parent.parent


def test_healthz():
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_class_endpoint_a6():
    resp = client.post("/class", json={"identifier": "A6"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["name"] == "A6"
    assert body["aut"] == 3
    assert body["predegree"] == "1785"
    assert body["display"].startswith("3*112*")
    # leading graded-lex term of the weighted class
    assert body["affine"]["terms"][0] == {"coeff": "6048", "exps": [6, 0, 0]}


def test_class_endpoint_points_flip():
    resp = client.post(
        "/class", json={"identifier": "points:2,1,1", "flip_sign": True}
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["sign_convention"] == "p(u,v)"
    coeffs = {tuple(t["exps"]): t["coeff"] for t in body["affine"]["terms"]}
    assert coeffs == {(1, 0): "-24", (0, 1): "-24"}


def test_flip_rejected_for_curves():
    resp = client.post("/class", json={"identifier": "A6", "flip_sign": True})
    assert resp.status_code == 400


def test_unknown_identifier_is_400():
    resp = client.post("/class", json={"identifier": "bogus"})
    assert resp.status_code == 400


def test_sections_table():
    resp = client.get("/table/sections")
    assert resp.status_code == 200
    rows = {row["name"]: row for row in resp.json()["rows"]}
    assert rows["general"]["weighted_sections"] == 510720
    assert rows["A6"]["weighted_sections"] == 63840
    assert rows["A6"]["per_aut"] == 21280


def test_unknown_table_is_400():
    assert client.get("/table/nope").status_code == 400


def test_verify_endpoint():
    resp = client.post("/verify", json={"suite": "quartics"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is True
    assert body["checked"] == 3
    assert body["failures"] == []


def test_table_with_inline_kazarian_locals():
    entries = json.loads((REPO_ROOT / "data" / "kazarian_a2.json").read_text())
    resp = client.post("/table/cubics", json={"suite": "all", "kazarian": entries})
    assert resp.status_code == 200
    names = {row["name"] for row in resp.json()["rows"]}
    assert "cubic:cuspidal" in names


def test_malformed_kazarian_entry_is_400():
    bad = [
        {
            "name": "A2",
            "polynomial": {"symbols": ["x", "y"], "terms": [{"coeff": "1", "exps": [1, 0]}]},
        }
    ]
    resp = client.post("/class", json={"identifier": "cubic:cuspidal", "kazarian": bad})
    assert resp.status_code == 400


def test_response_determinism():
    a = client.post("/class", json={"identifier": "D6"}).content
    b = client.post("/class", json={"identifier": "D6"}).content
    assert a == b


def test_towers_debug_endpoint():
    resp = client.get("/towers")
    assert resp.status_code == 200
    body = resp.json()
    assert "universal-curve" in body
    assert "triple-tangency" in body
    json.dumps(body)  # serializable end to end
