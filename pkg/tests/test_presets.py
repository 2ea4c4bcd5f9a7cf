import time

from fastapi.testclient import TestClient

from fastrobber.generators import named, petersen
from fastrobber.graph import from_edges, to_edge_list
from fastrobber.presets import PresetRegistry, layout_for, spring_layout
from fastrobber.service import create_app


def test_builtin_registry():
    reg = PresetRegistry()
    assert "petersen" in reg.names()
    assert reg.get("petersen") == petersen()
    entry = next(p for p in reg.describe() if p["name"] == "cycle-6")
    assert entry["n"] == 6 and entry["m"] == 6


def test_preset_dir_adds_and_shadows(tmp_path):
    (tmp_path / "mygraph.g").write_text("# my tiny triangle\n3 3\n0 1\n1 2\n0 2\n")
    (tmp_path / "petersen.g").write_text(to_edge_list(named("path", 3)))
    reg = PresetRegistry(tmp_path)
    assert reg.get("mygraph").n == 3
    desc = next(p for p in reg.describe() if p["name"] == "mygraph")
    assert desc["description"] == "my tiny triangle"
    # the directory shadows the built-in of the same name
    assert reg.get("petersen").n == 3


def test_layouts_cover_all_vertices():
    reg = PresetRegistry()
    for name in reg.names():
        g = reg.get(name)
        pts = reg.layout(name)
        assert len(pts) == g.n
        assert all(0 <= x <= 1 and 0 <= y <= 1 for x, y in pts)


def test_spring_layout_deterministic():
    g = from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3)])
    assert spring_layout(g) == spring_layout(g)
    pts = layout_for("spring", g)
    assert len({p for p in pts}) == g.n  # no two vertices collapse


def test_session_expiry():
    app = create_app(session_ttl=0.05)
    client = TestClient(app)
    view = client.post("/api/sessions", json={"preset": "cycle-6", "cops": 1}).json()
    sid = view["id"]
    assert client.get(f"/api/sessions/{sid}").status_code == 200
    time.sleep(0.1)
    # a registry access after the idle window drops the session
    client.post("/api/sessions", json={"preset": "cycle-6", "cops": 1})
    assert client.get(f"/api/sessions/{sid}").status_code == 404


def test_service_uses_preset_dir(tmp_path):
    (tmp_path / "tiny.g").write_text("2 1\n0 1\n")
    client = TestClient(create_app(preset_dir=str(tmp_path)))
    names = {p["name"] for p in client.get("/api/presets").json()}
    assert "tiny" in names
    view = client.post("/api/sessions", json={"preset": "tiny", "cops": 1}).json()
    assert view["graph"]["n"] == 2
