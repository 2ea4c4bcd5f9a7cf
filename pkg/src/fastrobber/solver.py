"""Exact analysis of the pursuit game by backward fixed-point iteration.

A state is (sorted cop multiset, robber vertex, side to move); cops move
first each round and capture by reaching the robber's vertex.  The robber
moves along a cop-free path of bounded (or unbounded) length.  The winning
region is the least fixed point of the usual alternating-reachability
operator; ranks record the round at which a state enters the region, i.e.
the number of cop moves needed to force capture.

Internally the region is kept as one robber-position bitmask per cop
placement, which turns the inner loop into plain integer bitwise work and
keeps full corpus sweeps (tens of thousands of graphs) cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterator, NamedTuple

from .errors import BudgetExceeded, NotConnected
from .graph import INFINITE, Graph, Speed, bfs_distances, is_connected, neighbor_masks

DEFAULT_MAX_STATES = 50_000_000


@dataclass(frozen=True)
class GameConfig:
    """Game parameters: number of cops, robber speed, cop speed."""

    cop_count: int
    robber_speed: Speed = INFINITE
    cop_speed: int = 1

    def __post_init__(self) -> None:
        if self.cop_count < 1:
            raise ValueError("need at least one cop")
        if self.cop_speed < 1:
            raise ValueError("cop speed must be >= 1")
        if self.robber_speed != INFINITE and (
            self.robber_speed != int(self.robber_speed) or self.robber_speed < 1
        ):
            raise ValueError("robber speed must be a positive integer or INFINITE")


class GameState(NamedTuple):
    cops: tuple[int, ...]  # sorted ascending (canonical multiset)
    robber: int
    cop_turn: bool


def canonical_placement(placement) -> tuple[int, ...]:
    return tuple(sorted(placement))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _ball_mask(masks: list[int], src: int, radius: int, blocked: int, n: int) -> int:
    """Vertices reachable from src within `radius` steps avoiding `blocked`."""
    reached = 1 << src
    frontier = reached
    cap = n if radius >= n else radius
    for _ in range(cap):
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~blocked & ~reached
        if not frontier:
            break
        reached |= frontier
    return reached


def legal_cop_moves_single(g: Graph, frm: int, b: int) -> frozenset[int]:
    """All vertices within distance b of frm (cop paths are unrestricted)."""
    if b < 1:
        raise ValueError("cop speed must be >= 1")
    masks = neighbor_masks(g)
    return frozenset(_bits(_ball_mask(masks, frm, b, 0, g.n)))


def legal_robber_moves(g: Graph, state: GameState, speed: Speed) -> frozenset[int]:
    """Destinations of cop-free paths of length <= speed from the robber's
    vertex; always includes staying put."""
    if state.cop_turn:
        raise ValueError("robber moves are defined on robber-turn states")
    masks = neighbor_masks(g)
    blocked = 0
    for c in state.cops:
        blocked |= 1 << c
    cap = g.n if speed == INFINITE or speed >= g.n else int(speed)
    return frozenset(_bits(_ball_mask(masks, state.robber, cap, blocked, g.n)))


class SolveResult:
    """Winning region, ranks and strategy for one (graph, config) instance.

    The bulk arrays are bitmask rows indexed by placement; the dict/set
    views the public contract promises are materialized lazily.
    """

    def __init__(
        self,
        graph: Graph,
        config: GameConfig,
        placements: list[tuple[int, ...]],
        valid: list[int],
        capture: list[int],
        joint: list[list[int]],
        win_c: list[int],
        win_r: list[int],
        rank_c: list[list[int]],
        rank_r: list[list[int]],
        rounds: int,
    ):
        self.graph = graph
        self.config = config
        self.placements = placements
        self._index = {p: i for i, p in enumerate(placements)}
        self._valid = valid
        self._capture = capture
        self._joint = joint
        self._win_c = win_c
        self._win_r = win_r
        self._rank_c = rank_c
        self._rank_r = rank_r
        self.rounds = rounds
        self.num_states = 2 * len(placements) * graph.n

    def _locate(self, state: GameState) -> tuple[int, int]:
        cops = canonical_placement(state.cops)
        i = self._index.get(cops)
        if i is None:
            raise KeyError(f"unknown placement {cops}")
        return i, state.robber

    def _ball(self, v: int) -> int:
        if not hasattr(self, "_balls"):
            masks = neighbor_masks(self.graph)
            self._balls = [
                _ball_mask(masks, u, self.config.cop_speed, 0, self.graph.n)
                for u in range(self.graph.n)
            ]
        return self._balls[v]

    def is_winning(self, state: GameState) -> bool:
        i, r = self._locate(state)
        mask = self._win_c[i] if state.cop_turn else self._win_r[i]
        return bool(mask >> r & 1)

    def state_rank(self, state: GameState) -> int | None:
        i, r = self._locate(state)
        rank = (self._rank_c if state.cop_turn else self._rank_r)[i][r]
        return rank if rank else None

    def placement_wins(self, placement) -> bool:
        i = self._index[canonical_placement(placement)]
        return self._valid[i] & ~self._win_c[i] == 0

    def winning_placements(self) -> list[tuple[int, ...]]:
        return [p for i, p in enumerate(self.placements) if self._valid[i] & ~self._win_c[i] == 0]

    def best_move(self, state: GameState) -> tuple[int, ...] | None:
        """Strategy move for a cop-winning cop-turn state, None otherwise.

        Capture when possible (lowest-index cop that can reach the robber
        steps onto it); otherwise the move reaching a robber-turn state of
        minimum rank, ties broken by placement order.
        """
        if not state.cop_turn:
            raise ValueError("strategy is defined on cop-turn states")
        i, r = self._locate(state)
        if not self._win_c[i] >> r & 1:
            return None
        if self._capture[i] >> r & 1:
            cops = list(canonical_placement(state.cops))
            for ci, c in enumerate(cops):
                if self._ball(c) >> r & 1:
                    cops[ci] = r
                    return tuple(sorted(cops))
        best: tuple[int, tuple[int, ...]] | None = None
        for j in self._joint[i]:
            rank = self._rank_r[j][r]
            if self._win_r[j] >> r & 1 and (best is None or (rank, self.placements[j]) < best):
                best = (rank, self.placements[j])
        assert best is not None
        return best[1]

    def states(self) -> Iterator[GameState]:
        for i, p in enumerate(self.placements):
            for r in _bits(self._valid[i]):
                yield GameState(p, r, True)
                yield GameState(p, r, False)

    @cached_property
    def winning(self) -> frozenset[GameState]:
        out = []
        for i, p in enumerate(self.placements):
            out.extend(GameState(p, r, True) for r in _bits(self._win_c[i]))
            out.extend(GameState(p, r, False) for r in _bits(self._win_r[i]))
        return frozenset(out)

    @cached_property
    def rank(self) -> dict[GameState, int]:
        out = {}
        for i, p in enumerate(self.placements):
            for r in _bits(self._win_c[i]):
                out[GameState(p, r, True)] = self._rank_c[i][r]
            for r in _bits(self._win_r[i]):
                out[GameState(p, r, False)] = self._rank_r[i][r]
        return out

    @cached_property
    def strategy(self) -> dict[GameState, tuple[int, ...]]:
        out = {}
        for s in self.winning:
            if s.cop_turn:
                move = self.best_move(s)
                assert move is not None
                out[s] = move
        return out


def solve(g: Graph, cfg: GameConfig, max_states: int = DEFAULT_MAX_STATES) -> SolveResult:
    """Compute the full cop-winning region for cfg.cop_count cops on g.

    Round r of the iteration adds the cop-turn states from which capture is
    forced within r cop moves, then the robber-turn states whose every
    escape lands in the region; a state's rank is the round that added it.
    States never added are robber-winning: the robber evades forever.
    """
    if not is_connected(g):
        raise NotConnected("the game is analyzed per connected graph")
    n = g.n
    k = cfg.cop_count
    nplacements = comb(n + k - 1, k)
    if 2 * nplacements * n > max_states:
        raise BudgetExceeded(
            f"{2 * nplacements * n} states exceed the budget of {max_states}"
        )

    masks = neighbor_masks(g)
    full = (1 << n) - 1
    ball = [_ball_mask(masks, v, cfg.cop_speed, 0, n) for v in range(n)]
    ball_lists = [list(_bits(b)) for b in ball]

    placements = list(combinations_with_replacement(range(n), k))
    index = {p: i for i, p in enumerate(placements)}
    P = len(placements)

    cops_mask = [0] * P
    capture = [0] * P
    valid = [0] * P
    joint: list[list[int]] = [[] for _ in range(P)]
    for i, p in enumerate(placements):
        cm = 0
        cap = 0
        for c in p:
            cm |= 1 << c
            cap |= ball[c]
        cops_mask[i] = cm
        capture[i] = cap
        valid[i] = full & ~cm
        if k == 1:
            joint[i] = [index[(m,)] for m in ball_lists[p[0]]]
        else:
            moves = {tuple(sorted(mv)) for mv in product(*(ball_lists[c] for c in p))}
            joint[i] = sorted(index[mv] for mv in moves)

    # robber mobility per placement: component masks for unbounded speed,
    # otherwise an explicit reach mask per start vertex
    unbounded = cfg.robber_speed == INFINITE or cfg.robber_speed >= n - 1
    comps: list[list[int]] = [[] for _ in range(P)]
    moves_of: list[list[int]] = [[] for _ in range(P)]
    a = 0 if unbounded else int(cfg.robber_speed)
    for i in range(P):
        free = valid[i]
        if unbounded:
            remaining = free
            cs = []
            while remaining:
                seed = remaining & -remaining
                comp = seed
                frontier = seed
                while frontier:
                    nxt = 0
                    for v in _bits(frontier):
                        nxt |= masks[v]
                    frontier = nxt & free & ~comp
                    comp |= frontier
                cs.append(comp)
                remaining &= ~comp
            comps[i] = cs
        else:
            mm = [0] * n
            blocked = cops_mask[i]
            for r in _bits(free):
                mm[r] = _ball_mask(masks, r, a, blocked, n)
            moves_of[i] = mm

    win_c = [0] * P
    win_r = [0] * P
    rank_c = [[0] * n for _ in range(P)]
    rank_r = [[0] * n for _ in range(P)]

    rnd = 0
    while True:
        rnd += 1
        progress = False
        for i in range(P):
            if rnd == 1:
                tgt = capture[i]
            else:
                tgt = 0
                for j in joint[i]:
                    tgt |= win_r[j]
            add = tgt & valid[i] & ~win_c[i]
            if add:
                win_c[i] |= add
                row = rank_c[i]
                for r in _bits(add):
                    row[r] = rnd
                progress = True
        for i in range(P):
            wc = win_c[i]
            add = 0
            if unbounded:
                for comp in comps[i]:
                    if comp & ~wc == 0:
                        add |= comp
            else:
                mm = moves_of[i]
                for r in _bits(valid[i] & ~win_r[i]):
                    if mm[r] & ~wc == 0:
                        add |= 1 << r
            add &= ~win_r[i]
            if add:
                win_r[i] |= add
                row = rank_r[i]
                for r in _bits(add):
                    row[r] = rnd
                progress = True
        if not progress:
            break

    return SolveResult(
        g, cfg, placements, valid, capture, joint, win_c, win_r, rank_c, rank_r, rnd - 1
    )


def placement_wins(
    g: Graph, cfg: GameConfig, placement, max_states: int = DEFAULT_MAX_STATES
) -> bool:
    """True iff the placement beats every robber starting choice (vacuously
    true when the cops cover all vertices)."""
    return solve(g, cfg, max_states).placement_wins(placement)


def cop_number(
    g: Graph,
    robber_speed: Speed,
    cop_speed: int,
    k_max: int,
    max_states: int = DEFAULT_MAX_STATES,
) -> int | None:
    """Smallest k <= k_max for which some placement wins, None if all fail."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    for k in range(1, k_max + 1):
        res = solve(g, GameConfig(k, robber_speed, cop_speed), max_states)
        for i in range(len(res.placements)):
            if res._valid[i] & ~res._win_c[i] == 0:
                return k
    return None


def best_cop_move(result: SolveResult, state: GameState) -> tuple[int, ...] | None:
    """Strategy move for a winning cop-turn state, or None when the state is
    outside the winning region."""
    return result.best_move(state)


def heuristic_cop_move(g: Graph, state: GameState, b: int) -> tuple[int, ...]:
    """Fallback play when no solve result applies: every cop moves at most b
    steps to minimize its distance to the robber, ties to the smallest id."""
    if not state.cop_turn:
        raise ValueError("cops move on cop-turn states")
    dist = bfs_distances(g, state.robber)
    masks = neighbor_masks(g)
    new = []
    for c in canonical_placement(state.cops):
        options = _bits(_ball_mask(masks, c, b, 0, g.n))
        new.append(min(options, key=lambda v: (dist[v], v)))
    return tuple(sorted(new))
