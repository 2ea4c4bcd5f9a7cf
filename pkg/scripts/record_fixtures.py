#!/usr/bin/env python3
"""Record real API exchanges for the web client's contract tests.

Drives the play service in-process and writes one JSON fixture per scripted
game into frontend/tests/fixtures/.  Preset games follow a deterministic
robber policy (prefer the highest-id safe vertex, else the highest-id legal
one); the C4 two-cop game records every robber branch so the client test
can check capture within the promised bound on all of them.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from fastrobber.generators import named
from fastrobber.graph import to_edge_list
from fastrobber.service import create_app

OUT_DIR = Path(__file__).resolve().parents[1] / "frontend" / "tests" / "fixtures"

client = TestClient(create_app())


def robber_policy(view: dict) -> int:
    options = view["safe_moves"] or view["legal_moves"]
    return max(options)


def record_preset_game(preset: str, cops: int, max_robber_moves: int) -> dict:
    create_req = {"preset": preset, "cops": cops}
    view = client.post("/api/sessions", json=create_req).json()
    steps = []
    sid = view["id"]
    place_req = {"vertex": robber_policy(view)}
    placed = client.post(f"/api/sessions/{sid}/robber", json=place_req).json()
    steps.append({"request": place_req, "response": placed})
    state = placed
    moves = 0
    while state["outcome"] is None and moves < max_robber_moves:
        req = {"vertex": robber_policy(state), "round": state["round"]}
        state = client.post(f"/api/sessions/{sid}/robber", json=req).json()
        steps.append({"request": req, "response": state})
        moves += 1
    return {"name": f"{preset}-k{cops}", "create": {"request": create_req, "response": view},
            "steps": steps}


def record_c4_game_tree() -> dict:
    """Every robber line on C4 with two optimally-played cops."""
    edge_list = to_edge_list(named("cycle", 4))
    create_req = {"edge_list": edge_list, "cops": 2}
    probe = client.post("/api/sessions", json=create_req).json()
    lines = []

    def play_line(choices: list[int]) -> tuple[dict, list[dict]]:
        view = client.post("/api/sessions", json=create_req).json()
        sid = view["id"]
        steps = []
        state = view
        for c in choices:
            req = {"vertex": c}
            if state["robber"] is not None:
                req["round"] = state["round"]
            state = client.post(f"/api/sessions/{sid}/robber", json=req).json()
            steps.append({"request": req, "response": state})
        return state, steps

    frontier: list[list[int]] = [[start] for start in probe["legal_moves"]]
    while frontier:
        choices = frontier.pop(0)
        state, steps = play_line(choices)
        if state["outcome"] is None:
            for nxt in state["legal_moves"]:
                frontier.append(choices + [nxt])
        else:
            lines.append({"choices": choices, "steps": steps})
    return {"name": "c4-k2-all-lines", "create": {"request": create_req, "response": probe},
            "lines": lines}


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    games = [
        record_preset_game("petersen", 3, 6),
        record_preset_game("cycle-6", 1, 15),
        record_preset_game("grid-3x3", 2, 6),
    ]
    total_rounds = sum(len(g["steps"]) for g in games)
    for game in games:
        path = OUT_DIR / f"{game['name']}.json"
        path.write_text(json.dumps(game, indent=1, sort_keys=True))
        print(f"wrote {path.name}: {len(game['steps'])} robber actions")
    tree = record_c4_game_tree()
    path = OUT_DIR / f"{tree['name']}.json"
    path.write_text(json.dumps(tree, indent=1, sort_keys=True))
    print(f"wrote {path.name}: {len(tree['lines'])} complete lines")
    print(f"total scripted robber actions across presets: {total_rounds}")


if __name__ == "__main__":
    main()
