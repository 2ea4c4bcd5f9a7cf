"""HTTP session service: a human robber against the solver's cops.

One round per request: the client places or moves the robber, the server
validates, immediately answers with the cops' reply, and returns the full
session view.  Sessions live in memory with idle expiry; each session is
internally serialized, so concurrent conflicting moves resolve to exactly
one success.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Literal

from fastapi import FastAPI, HTTPException
from fastapi.responses import HTMLResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .errors import InvalidEdge, ParseError
from .graph import INFINITE, Graph, from_edge_list, is_connected
from .presets import PresetRegistry, spring_layout
from .solver import (
    GameConfig,
    GameState,
    SolveResult,
    heuristic_cop_move,
    legal_robber_moves,
    solve,
)

DEFAULT_SESSION_TTL = 3600.0
DEFAULT_MAX_STATES = 500_000


class CreateSessionBody(BaseModel):
    preset: str | None = None
    edge_list: str | None = None
    cops: int = 1
    robber_speed: int | Literal["inf"] = "inf"
    cop_speed: int = 1
    strict: bool = False


class RobberBody(BaseModel):
    vertex: int
    round: int | None = None  # optimistic-concurrency token


@dataclass
class Session:
    id: str
    graph: Graph
    layout: list[tuple[float, float]]
    config: GameConfig
    mode: str  # "optimal" | "heuristic"
    result: SolveResult | None
    cops: tuple[int, ...]
    theoretically_winning: bool
    warning: str | None = None
    robber: int | None = None
    outcome: str | None = None  # None | "captured" | "resigned"
    history: list[dict] = field(default_factory=list)
    round: int = 0
    last_touch: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)

    # ----------------------------------------------------------- views

    def _legal_moves(self) -> list[int]:
        if self.outcome is not None:
            return []
        if self.robber is None:
            return [v for v in range(self.graph.n) if v not in self.cops]
        state = GameState(self.cops, self.robber, False)
        return sorted(legal_robber_moves(self.graph, state, self.config.robber_speed))

    def _safe_moves(self, legal: list[int]) -> list[int] | None:
        if self.result is None or self.outcome is not None:
            return None
        return [
            v
            for v in legal
            if not self.result.is_winning(GameState(self.cops, v, True))
        ]

    def _capture_in(self) -> int | None:
        if self.result is None or self.outcome is not None:
            return None
        if self.robber is None:
            ranks = [
                self.result.state_rank(GameState(self.cops, r, True))
                for r in range(self.graph.n)
                if r not in self.cops
            ]
            if any(r is None for r in ranks):
                return None
            return max(ranks, default=0)
        return self.result.state_rank(GameState(self.cops, self.robber, True))

    def view(self) -> dict:
        legal = self._legal_moves()
        return {
            "id": self.id,
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges()]},
            "layout": [list(p) for p in self.layout],
            "cops": list(self.cops),
            "robber": self.robber,
            "turn": None if self.outcome else ("place" if self.robber is None else "robber"),
            "outcome": self.outcome,
            "captured": self.outcome == "captured",
            "round": self.round,
            "mode": self.mode,
            "theoretically_winning": self.theoretically_winning,
            "capture_in": self._capture_in(),
            "legal_moves": legal,
            "safe_moves": self._safe_moves(legal),
            "history": self.history,
            "warning": self.warning,
        }

    # ----------------------------------------------------------- play

    def _cops_reply(self) -> None:
        assert self.robber is not None and self.outcome is None
        state = GameState(self.cops, self.robber, True)
        move = None
        if self.result is not None:
            move = self.result.best_move(state)
        if move is None:
            move = heuristic_cop_move(self.graph, state, self.config.cop_speed)
        self.round += 1
        self.history.append(
            {"actor": "cops", "from": list(self.cops), "to": list(move), "round": self.round}
        )
        self.cops = move
        if self.robber in move:
            self.outcome = "captured"

    def place_robber(self, vertex: int) -> None:
        if self.outcome is not None or self.robber is not None:
            raise HTTPException(409, "robber already placed")
        if not 0 <= vertex < self.graph.n or vertex in self.cops:
            raise HTTPException(
                422,
                detail={"error": "illegal placement", "legal_moves": self._legal_moves()},
            )
        self.robber = vertex
        self.history.append({"actor": "robber", "from": None, "to": vertex, "round": self.round})
        self._cops_reply()

    def move_robber(self, vertex: int, token: int | None) -> None:
        if self.outcome is not None:
            raise HTTPException(409, "game over")
        if self.robber is None:
            raise HTTPException(409, "robber not placed yet")
        if token is not None and token != self.round:
            raise HTTPException(409, f"stale round token {token}, current round {self.round}")
        legal = self._legal_moves()
        if vertex not in legal:
            raise HTTPException(
                422, detail={"error": "illegal move", "legal_moves": legal}
            )
        self.history.append(
            {"actor": "robber", "from": self.robber, "to": vertex, "round": self.round}
        )
        self.robber = vertex
        self._cops_reply()


class SessionStore:
    def __init__(self, ttl: float = DEFAULT_SESSION_TTL):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._ttl = ttl

    def put(self, session: Session) -> None:
        with self._lock:
            self._purge()
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._purge()
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(404, "unknown session")
        session.last_touch = time.monotonic()
        return session

    def drop(self, session_id: str) -> None:
        with self._lock:
            self._sessions.pop(session_id, None)

    def _purge(self) -> None:
        cutoff = time.monotonic() - self._ttl
        stale = [sid for sid, s in self._sessions.items() if s.last_touch < cutoff]
        for sid in stale:
            del self._sessions[sid]


def _greedy_placement(g: Graph, k: int) -> tuple[int, ...]:
    """Greedy max-coverage seeds; extra cops fill the lowest free ids."""
    covered: set[int] = set()
    cops: list[int] = []
    for _ in range(k):
        best = None
        gain = -1
        for v in range(g.n):
            new = len(({v} | set(g.adj[v])) - covered)
            if new > gain:
                best, gain = v, new
        if gain == 0:
            break
        cops.append(best)
        covered |= {best} | set(g.adj[best])
    free = [v for v in range(g.n) if v not in cops]
    while len(cops) < k:
        cops.append(free.pop(0) if free else cops[0])
    return tuple(sorted(cops))


def _pick_placement(res: SolveResult, g: Graph) -> tuple[tuple[int, ...], bool]:
    """Lexicographically first winning placement, else the placement that
    wins against the most robber starts."""
    winning = res.winning_placements()
    if winning:
        return winning[0], True
    best = max(
        range(len(res.placements)),
        key=lambda i: (
            (res._win_c[i] & res._valid[i]).bit_count(),
            [-c for c in res.placements[i]],
        ),
    )
    return res.placements[best], False


def create_app(
    preset_dir: str | None = None,
    ui_dir: str | None = None,
    max_states: int = DEFAULT_MAX_STATES,
    session_ttl: float = DEFAULT_SESSION_TTL,
) -> FastAPI:
    app = FastAPI(title="fastrobber", version="0.1.0")
    registry = PresetRegistry(preset_dir)
    store = SessionStore(session_ttl)

    @app.get("/api/presets")
    def list_presets():
        return registry.describe()

    @app.get("/api/graphs/{name}")
    def get_graph(name: str):
        g = registry.get(name)
        if g is None:
            raise HTTPException(404, f"unknown preset {name!r}")
        return {
            "name": name,
            "n": g.n,
            "edges": [list(e) for e in g.edges()],
            "layout": [list(p) for p in registry.layout(name)],
        }

    @app.post("/api/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        if (body.preset is None) == (body.edge_list is None):
            raise HTTPException(400, "give exactly one of preset or edge_list")
        if body.preset is not None:
            g = registry.get(body.preset)
            if g is None:
                raise HTTPException(400, f"unknown preset {body.preset!r}")
            layout = registry.layout(body.preset)
        else:
            try:
                g = from_edge_list(body.edge_list)
            except (ParseError, InvalidEdge) as exc:
                raise HTTPException(400, f"bad edge list: {exc}") from exc
            layout = [(round(x, 4), round(y, 4)) for x, y in spring_layout(g)]
        if not is_connected(g) or g.n == 0:
            raise HTTPException(400, "graph must be connected and nonempty")
        if body.cops < 1:
            raise HTTPException(400, "need at least one cop")
        speed = INFINITE if body.robber_speed == "inf" else body.robber_speed
        try:
            config = GameConfig(body.cops, speed, body.cop_speed)
        except ValueError as exc:
            raise HTTPException(400, str(exc)) from exc

        state_count = 2 * comb(g.n + body.cops - 1, body.cops) * g.n
        warning = None
        if state_count <= max_states:
            result = solve(g, config)
            cops, winning = _pick_placement(result, g)
            mode = "optimal"
        else:
            if body.strict:
                raise HTTPException(
                    409,
                    f"{state_count} states exceed the solve budget of {max_states}",
                )
            result = None
            cops = _greedy_placement(g, body.cops)
            winning = False
            mode = "heuristic"
            warning = "state space over budget; cops play a greedy heuristic"

        session = Session(
            id=secrets.token_hex(8),
            graph=g,
            layout=layout,
            config=config,
            mode=mode,
            result=result,
            cops=cops,
            theoretically_winning=winning,
            warning=warning,
        )
        session.history.append(
            {"actor": "cops", "from": None, "to": list(cops), "round": 0}
        )
        if all(v in cops for v in range(g.n)):
            # nowhere to place the robber: the cops win before the game starts
            session.outcome = "captured"
        store.put(session)
        return session.view()

    @app.post("/api/sessions/{session_id}/robber")
    def robber_action(session_id: str, body: RobberBody):
        session = store.get(session_id)
        with session.lock:
            if session.robber is None:
                session.place_robber(body.vertex)
            else:
                session.move_robber(body.vertex, body.round)
            return session.view()

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return session.view()

    @app.delete("/api/sessions/{session_id}")
    def resign(session_id: str):
        session = store.get(session_id)
        with session.lock:
            if session.outcome is None:
                session.outcome = "resigned"
            return session.view()

    ui_path = _resolve_ui_dir(ui_dir)
    if ui_path is not None:
        app.mount("/", StaticFiles(directory=ui_path, html=True), name="ui")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index():
            return (
                "<html><body><h1>fastrobber API</h1>"
                "<p>No UI build found. The JSON API lives under /api/.</p>"
                "</body></html>"
            )

    return app


def _resolve_ui_dir(ui_dir: str | None) -> str | None:
    if ui_dir is not None:
        return ui_dir if Path(ui_dir).is_dir() else None
    # repo layout: frontend/index.html plus the tsc output in frontend/dist
    candidate = Path(__file__).resolve().parents[2] / "frontend"
    if (candidate / "index.html").is_file() and (candidate / "dist").is_dir():
        return str(candidate)
    return None
