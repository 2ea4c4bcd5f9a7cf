"""Deterministic construction of the graph families used by the experiments.

Randomized families take an explicit 64-bit seed and draw from SplitMix64
(Steele/Lea/Flood), pinned here by its recurrence constants so that golden
outputs survive interpreter and library upgrades:

    state  = (state + 0x9E3779B97F4A7C15) mod 2^64
    z      = state
    z      = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z      = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z ^ (z >> 31)

The platform RNG is never used.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .errors import RetryLimit, TooLarge, TooSmall
from .graph import Graph, cartesian_product, from_edges

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Seeded 64-bit generator; see the module docstring for the recurrence."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), bias-free via rejection."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


def _path(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def _cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i--i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, edges)


_MINIMUMS = {"path": 1, "cycle": 3, "complete": 1, "wheel": 4, "star": 2}


def named(kind: str, n: int | None = None) -> Graph:
    """Canonical labelings of the standard families.

    path: 0-1-...-(n-1); cycle: path plus (n-1, 0); wheel: cycle on 0..n-2
    plus hub n-1; star: hub n-1 joined to all leaves; petersen takes no n.
    """
    if kind == "petersen":
        if n not in (None, 10):
            raise TooSmall("petersen has exactly 10 vertices")
        return petersen()
    if kind not in _MINIMUMS:
        raise ValueError(f"unknown graph kind {kind!r}")
    if n is None:
        raise ValueError(f"kind {kind!r} needs a vertex count")
    if n < _MINIMUMS[kind]:
        raise TooSmall(f"{kind} needs at least {_MINIMUMS[kind]} vertices, got {n}")
    if kind == "path":
        return _path(n)
    if kind == "cycle":
        return _cycle(n)
    if kind == "complete":
        return from_edges(n, combinations(range(n), 2))
    if kind == "wheel":
        edges = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
        edges += [(i, n - 1) for i in range(n - 1)]
        return from_edges(n, edges)
    # star
    return from_edges(n, ((i, n - 1) for i in range(n - 1)))


def double_wheel() -> Graph:
    """Two 4-spoke wheels whose rims are joined by a two-edge path.

    Wheel A: rim 0..3, hub 4.  Wheel B: rim 5..8, hub 9.  Middle vertex 10
    with edges 0-10 and 10-5.  The classic two-exit corridor example: one
    cop loses, two cops win.
    """
    edges = [(i, (i + 1) % 4) for i in range(4)] + [(i, 4) for i in range(4)]
    edges += [(5 + i, 5 + (i + 1) % 4) for i in range(4)] + [(5 + i, 9) for i in range(4)]
    edges += [(0, 10), (10, 5)]
    return from_edges(11, edges)


def grid(dims: list[int]) -> Graph:
    """Cartesian product of paths, one per entry of dims."""
    if any(d < 1 for d in dims):
        raise TooSmall("grid dimensions must be >= 1")
    return cartesian_product([_path(d) for d in dims])


def torus(dims: list[int]) -> Graph:
    """Cartesian product of cycles, one per entry of dims."""
    if any(d < 3 for d in dims):
        raise TooSmall("torus dimensions must be >= 3")
    return cartesian_product([_cycle(d) for d in dims])


def gnp(n: int, p: float, seed: int) -> Graph:
    """Binomial random graph: every pair (u < v), visited in lexicographic
    order, is an edge independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return from_edges(n, edges)


def random_regular(n: int, d: int, seed: int, max_tries: int = 1000) -> Graph:
    """Uniform random simple d-regular graph by the pairing model.

    nd half-edges are shuffled and paired consecutively; any attempt that
    produces a loop or a repeated edge is rejected wholesale and redrawn.
    Connectivity is not enforced.
    """
    if n * d % 2 != 0:
        raise ValueError(f"n*d = {n * d} must be even")
    if not 0 <= d < n:
        raise ValueError(f"degree {d} must satisfy 0 <= d < n")
    rng = SplitMix64(seed)
    stubs_proto = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        stubs = stubs_proto.copy()
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return from_edges(n, edges)
    raise RetryLimit(f"no simple pairing found in {max_tries} attempts")


def pair_order(n: int) -> list[tuple[int, int]]:
    """The fixed bit order used by mask-based enumeration: lexicographic pairs."""
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = pair_order(n)
    return from_edges(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on n vertices, in adjacency-mask order.

    No isomorphism reduction: every labeled graph appears once.
    """
    if n > 7:
        raise TooLarge(f"enumeration supported for n <= 7, got {n}")
    if n < 1:
        raise TooSmall("need at least one vertex")
    pairs = pair_order(n)
    npairs = len(pairs)
    full = (1 << n) - 1
    nbr = [0] * n
    for mask in range(1 << npairs):
        if mask:
            # counting from mask-1 flips the trailing-ones run; amortized
            # two pair toggles per step
            flips = (mask - 1) ^ mask
            while flips:
                low = flips & -flips
                u, v = pairs[low.bit_length() - 1]
                nbr[u] ^= 1 << v
                nbr[v] ^= 1 << u
                flips ^= low
        comp = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= nbr[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
            comp |= frontier
        if comp == full:
            adj = tuple(
                tuple(_mask_vertices(nbr[v])) for v in range(n)
            )
            yield Graph(n, adj)


def _mask_vertices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
