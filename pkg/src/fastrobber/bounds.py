"""Exact expansion and domination quantities with witnesses, plus the
closed-form lower and upper bounds on the cop number that they feed.

All ratios are exact rationals; floating point only appears in the two
transcendental formulas (the probabilistic-method domination bound and the
random-graph expansion constants), evaluated at double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Literal

from .errors import BudgetExceeded, InfeasibleInput
from .graph import Graph, neighbor_masks

ISO_MAX_N = 24
DOMINATION_MAX_N = 40
ESCAPE_MAX_SUBSETS = 2_000_000


@dataclass(frozen=True)
class IsoperimetricResult:
    """Exact minimum boundary ratio over sets of at most half the vertices,
    with a minimizing witness (smallest, then lexicographically first)."""

    value: Fraction
    witness: tuple[int, ...]


def _better(num: int, size: int, mask: int, best: tuple[int, int, int]) -> bool:
    """Is (num/size, with witness mask) better than best = (num, size, mask)?
    Order: smaller ratio, then smaller witness, then lexicographically
    smaller witness (compared on sorted vertex tuples)."""
    b_num, b_size, b_mask = best
    lhs = num * b_size
    rhs = b_num * size
    if lhs != rhs:
        return lhs < rhs
    if size != b_size:
        return size < b_size
    return _mask_tuple(mask) < _mask_tuple(b_mask)


def _mask_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def edge_isoperimetric_exact(g: Graph, max_n: int = ISO_MAX_N) -> IsoperimetricResult:
    """min |boundary edges| / |S| over nonempty S with |S| <= n/2.

    Gray-code scan over all subsets; the cut size is maintained
    incrementally, one vertex toggle per step.
    """
    n = g.n
    if n < 2:
        raise ValueError("need at least two vertices")
    if n > max_n:
        raise BudgetExceeded(f"2^{n} subsets exceed the n <= {max_n} budget")
    masks = neighbor_masks(g)
    deg = [g.degree(v) for v in range(n)]
    half = n // 2
    best: tuple[int, int, int] | None = None  # (cut, size, mask)
    smask = 0
    size = 0
    cut = 0
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        inside = (masks[v] & smask).bit_count()
        if smask & bit:
            cut -= deg[v] - 2 * inside
            smask ^= bit
            size -= 1
        else:
            cut += deg[v] - 2 * inside
            smask ^= bit
            size += 1
        if 1 <= size <= half:
            if best is None:
                best = (cut, size, smask)
            elif cut * best[1] < best[0] * size or (
                cut * best[1] == best[0] * size and _better(cut, size, smask, best)
            ):
                best = (cut, size, smask)
    assert best is not None
    return IsoperimetricResult(Fraction(best[0], best[1]), tuple(_mask_tuple(best[2])))


def vertex_isoperimetric_exact(g: Graph, max_n: int = ISO_MAX_N) -> IsoperimetricResult:
    """min |N(S) - S| / |S| over nonempty S with |S| <= n/2."""
    n = g.n
    if n < 2:
        raise ValueError("need at least two vertices")
    if n > max_n:
        raise BudgetExceeded(f"2^{n} subsets exceed the n <= {max_n} budget")
    half = n // 2
    adj = g.adj
    inmask = 0
    size = 0
    boundary = 0  # vertices outside S with a neighbor inside
    cnt = [0] * n  # per-vertex count of neighbors inside S
    best: tuple[int, int, int] | None = None
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        if inmask & bit:
            inmask ^= bit
            size -= 1
            for u in adj[v]:
                cnt[u] -= 1
                if cnt[u] == 0 and not inmask >> u & 1:
                    boundary -= 1
            if cnt[v] > 0:
                boundary += 1
        else:
            if cnt[v] > 0:
                boundary -= 1
            inmask ^= bit
            size += 1
            for u in adj[v]:
                cnt[u] += 1
                if cnt[u] == 1 and not inmask >> u & 1:
                    boundary += 1
        if 1 <= size <= half:
            if best is None:
                best = (boundary, size, inmask)
            elif boundary * best[1] < best[0] * size or (
                boundary * best[1] == best[0] * size
                and _better(boundary, size, inmask, best)
            ):
                best = (boundary, size, inmask)
    assert best is not None
    return IsoperimetricResult(Fraction(best[0], best[1]), tuple(_mask_tuple(best[2])))


def domination_number_exact(
    g: Graph, max_n: int = DOMINATION_MAX_N
) -> tuple[int, frozenset[int]]:
    """Minimum dominating set size with a witness, by branch and bound.

    Branches on an uncovered vertex with fewest coverers; the bound is the
    ceiling of uncovered count over the best single-vertex coverage.
    """
    n = g.n
    if n > max_n:
        raise BudgetExceeded(f"branch and bound capped at n <= {max_n}")
    if n == 0:
        return 0, frozenset()
    masks = neighbor_masks(g)
    closed = [masks[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1

    # greedy upper bound, max new coverage then smallest id
    covered = 0
    greedy: list[int] = []
    while covered != full:
        v = max(range(n), key=lambda u: ((closed[u] & ~covered).bit_count(), -u))
        greedy.append(v)
        covered |= closed[v]
    best_size = len(greedy)
    best_set = sorted(greedy)
    max_cover = max(c.bit_count() for c in closed)

    coverers = [[u for u in range(n) if closed[u] >> v & 1] for v in range(n)]

    def search(uncovered: int, chosen: list[int]) -> None:
        nonlocal best_size, best_set
        if not uncovered:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = sorted(chosen)
            return
        if len(chosen) + -(-uncovered.bit_count() // max_cover) >= best_size:
            return
        v = min(
            _iter_bits(uncovered),
            key=lambda u: sum(1 for w in coverers[u] if closed[w] & uncovered),
        )
        cands = sorted(
            coverers[v], key=lambda u: -(closed[u] & uncovered).bit_count()
        )
        for u in cands:
            chosen.append(u)
            search(uncovered & ~closed[u], chosen)
            chosen.pop()

    search(full, [])
    return best_size, frozenset(best_set)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BoundReport:
    """The four closed-form cop-number lower bounds, the domination upper
    bound, and the quantities they were computed from."""

    n: int
    max_degree: int
    iota_e: Fraction
    iota_v: Fraction
    lower_edge_sharp: Fraction
    lower_edge_relaxed: Fraction
    lower_vertex_b: Fraction
    lower_vertex_c: Fraction
    upper_domination: int

    def best_lower(self) -> Fraction:
        return max(
            self.lower_edge_sharp,
            self.lower_edge_relaxed,
            self.lower_vertex_b,
            self.lower_vertex_c,
        )


def theorem34_bounds(g: Graph, iota_e: Fraction, iota_v: Fraction) -> BoundReport:
    """Evaluate the expansion lower bounds

        ie*n / (D^2 - D + ie*(D+1)),   ie*n / (2 D^2),
        iv*n / (3D + iv*(D+1)),        iv*n / (4D)

    exactly, alongside the domination-number upper bound."""
    n = g.n
    d = g.max_degree
    if d < 1:
        raise ValueError("bounds need at least one edge")
    gamma, _ = domination_number_exact(g)
    sharp = Fraction(iota_e * n, 1) / (d * d - d + iota_e * (d + 1))
    relaxed = Fraction(iota_e * n, 1) / (2 * d * d)
    vb = Fraction(iota_v * n, 1) / (3 * d + iota_v * (d + 1))
    vc = Fraction(iota_v * n, 1) / (4 * d)
    return BoundReport(n, d, iota_e, iota_v, sharp, relaxed, vb, vc, gamma)


def escape_certificate(g: Graph, m: int, max_subsets: int = ESCAPE_MAX_SUBSETS) -> bool:
    """True iff deleting the closed neighborhood of any set of at most m
    vertices leaves a component on more than half the vertices.  A true
    certificate proves that m cops cannot catch the unbounded-speed robber.
    """
    n = g.n
    total = sum(math.comb(n, i) for i in range(m + 1))
    if total > max_subsets:
        raise BudgetExceeded(f"{total} subsets exceed the budget of {max_subsets}")
    masks = neighbor_masks(g)
    closed = [masks[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    for size in range(m + 1):
        for subset in combinations(range(n), size):
            removed = 0
            for v in subset:
                removed |= closed[v]
            free = full & ~removed
            found = False
            while free:
                seed = free & -free
                comp = seed
                frontier = seed
                while frontier:
                    nxt = 0
                    for v in _iter_bits(frontier):
                        nxt |= masks[v]
                    frontier = nxt & full & ~removed & ~comp
                    comp |= frontier
                if 2 * comp.bit_count() > n:
                    found = True
                    break
                free &= ~comp
            if not found:
                return False
    return True


PickMode = Literal["A", "B"]


def subset_pick(sizes: list[int], n: int, mode: PickMode) -> frozenset[int]:
    """Indices of items whose sizes sum into [t/3, n/2] (mode A, t the total)
    or [n/4, n/2] (mode B), both inclusive.

    Items must be positive, each at most n/2, with total at most n; mode B
    additionally needs total >= n/4.  Strategy: a single in-window item if
    any, else accumulate in descending size order up to the window's lower
    edge; if that overshoots, fall back to exhaustive search (inputs are
    small by precondition).
    """
    if mode not in ("A", "B"):
        raise ValueError(f"unknown mode {mode!r}")
    if not sizes or any(s < 1 for s in sizes):
        raise InfeasibleInput("sizes must be positive integers")
    t = sum(sizes)
    if any(2 * s > n for s in sizes):
        raise InfeasibleInput("every size must be at most n/2")
    if t > n:
        raise InfeasibleInput("total size must be at most n")
    if mode == "B" and 4 * t < n:
        raise InfeasibleInput("mode B needs total size at least n/4")

    if mode == "A":
        in_window = lambda s: 3 * s >= t and 2 * s <= n
        lower_ok = lambda s: 3 * s >= t
    else:
        in_window = lambda s: 4 * s >= n and 2 * s <= n
        lower_ok = lambda s: 4 * s >= n

    for i, s in enumerate(sizes):
        if in_window(s):
            return frozenset({i})

    order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
    acc = 0
    picked = []
    for i in order:
        picked.append(i)
        acc += sizes[i]
        if lower_ok(acc):
            break
    if in_window(acc):
        return frozenset(picked)

    for r in range(1, len(sizes) + 1):
        for comb_idx in combinations(range(len(sizes)), r):
            if in_window(sum(sizes[i] for i in comb_idx)):
                return frozenset(comb_idx)
    raise InfeasibleInput("no subset lands in the window")


def alon_spencer_domination_bound(g: Graph) -> float:
    """Probabilistic-method upper bound n * (1 + ln(d_min + 1)) / (d_min + 1)
    on the domination number."""
    d = g.min_degree
    return g.n * (1.0 + math.log(d + 1)) / (d + 1)


def theorem42_constants_check(b: float, t: float, k: float) -> bool:
    """Do (b, t, k) satisfy the two strict inequalities under which a random
    graph with np >= k*log(n) almost surely has vertex expansion >= b?

        t > (1 + log 2)/(1 - b) - log(1 - b)  and  k > 2t / (1 - e^(-t)).
    """
    if not 0.0 < b < 1.0:
        raise ValueError("b must lie strictly between 0 and 1")
    beta = 1.0 - b
    return t > (1.0 + math.log(2.0)) / beta - math.log(beta) and k > 2.0 * t / (
        1.0 - math.exp(-t)
    )
