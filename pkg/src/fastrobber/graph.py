"""Immutable simple undirected graphs plus the structural algorithms the
game analysis is built on: components, bounded-length reachability, block
decomposition, power graphs and Cartesian products.

Vertices are dense integer ids 0..n-1.  Vertex sets travel as plain
frozensets; anything order-sensitive (component lists, blocks, the edge-list
serialization) is sorted ascending so repeated runs produce identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyFactor, InvalidEdge, NotConnected, ParseError, SourceForbidden

#: Robber speed marker: may traverse any cop-free path, whatever its length.
INFINITE: float = math.inf

Speed = int | float  # an int >= 0, or INFINITE


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex sorted neighbor tuples.

    Instances are immutable and hashable, safe to share across threads and
    to use as cache keys.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adj), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge iterable.

    Duplicate edges are collapsed silently; loops and out-of-range ids raise
    InvalidEdge.
    """
    if n < 0:
        raise InvalidEdge(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list document format.

    Line 1 is "n m", followed by m lines "u v".  Lines starting with '#' are
    ignored anywhere; the trailing newline is optional.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty document")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError(f"non-integer header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise ParseError(f"negative counts in header {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"non-integer edge line {ln!r}") from exc
        edges.append((u, v))
    return from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    """Serialize bit-exactly: header, then edges with u < v in lexicographic order."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def neighbor_masks(g: Graph) -> list[int]:
    """Adjacency as one bitmask per vertex (bit v of masks[u] set iff u~v)."""
    masks = [0] * g.n
    for u in range(g.n):
        acc = 0
        for v in g.adj[u]:
            acc |= 1 << v
        masks[u] = acc
    return masks


def _mask_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _spread(seed: int, allowed: int, masks: list[int]) -> int:
    """Bitmask flood fill: component of `seed` inside `allowed`."""
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        for v in _mask_bits(frontier):
            nxt |= masks[v]
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    masks = neighbor_masks(g)
    full = (1 << g.n) - 1
    return _spread(1, full, masks) == full


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """s together with every vertex adjacent to s."""
    out = set(s)
    for v in tuple(out):
        out.update(g.adj[v])
    return frozenset(out)


def removal_components(g: Graph, forbidden: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the graph minus `forbidden`.

    Components are returned sorted by their minimum vertex; the list is empty
    when every vertex is forbidden.
    """
    banned = set(forbidden)
    masks = neighbor_masks(g)
    allowed = 0
    for v in range(g.n):
        if v not in banned:
            allowed |= 1 << v
    comps = []
    remaining = allowed
    while remaining:
        seed = remaining & -remaining
        comp = _spread(seed, allowed, masks)
        comps.append(frozenset(_mask_bits(comp)))
        remaining &= ~comp
    return comps


def reachable_within(
    g: Graph, src: int, steps: Speed, forbidden: Iterable[int] = ()
) -> frozenset[int]:
    """Vertices reachable from src by a path of length <= steps whose
    vertices (endpoints included) all avoid `forbidden`.

    Always contains src.  steps=INFINITE means the whole component of the
    graph minus `forbidden` that contains src.
    """
    banned = set(forbidden)
    if src in banned:
        raise SourceForbidden(f"source {src} is forbidden")
    masks = neighbor_masks(g)
    allowed = 0
    for v in range(g.n):
        if v not in banned:
            allowed |= 1 << v
    # any simple path has length <= n-1, so large finite speeds act like INFINITE
    cap = g.n if steps == INFINITE or steps >= g.n else int(steps)
    reached = 1 << src
    frontier = reached
    for _ in range(cap):
        nxt = 0
        for v in _mask_bits(frontier):
            nxt |= masks[v]
        frontier = nxt & allowed & ~reached
        if not frontier:
            break
        reached |= frontier
    return frozenset(_mask_bits(reached))


def bfs_distances(g: Graph, src: int) -> list[int]:
    """Single-source distances; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if dist[v] < 0:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices and the incidence structure of the block tree.

    Blocks are maximal 2-connected subgraphs plus bridge edges, as sorted
    vertex tuples in lexicographic order.  tree_edges pairs a block index
    with each cut vertex the block contains; for a connected graph the
    incidence graph these edges describe is a tree.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    tree_edges: tuple[tuple[int, int], ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan block decomposition (iterative, edge-stack variant).

    Requires a connected graph.  A one-vertex graph has no edges and hence
    no blocks; it decomposes to the empty structure.
    """
    if not is_connected(g):
        raise NotConnected("block decomposition needs a connected graph")
    if g.n <= 1:
        return BlockDecomposition((), frozenset(), ())

    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    children = [0] * n
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []

    timer = 0
    disc[0] = low[0] = timer
    timer += 1
    stack: list[tuple[int, Iterator[int]]] = [(0, iter(g.adj[0]))]
    while stack:
        u, it = stack[-1]
        descended = False
        for v in it:
            if disc[v] < 0:
                parent[v] = u
                children[u] += 1
                edge_stack.append((u, v))
                disc[v] = low[v] = timer
                timer += 1
                stack.append((v, iter(g.adj[v])))
                descended = True
                break
            if v != parent[u] and disc[v] < disc[u]:
                edge_stack.append((u, v))
                if disc[v] < low[u]:
                    low[u] = disc[v]
        if descended:
            continue
        stack.pop()
        if not stack:
            continue
        p = stack[-1][0]
        if low[u] < low[p]:
            low[p] = low[u]
        if low[u] >= disc[p]:
            blk = []
            while edge_stack[-1] != (p, u):
                blk.append(edge_stack.pop())
            blk.append(edge_stack.pop())
            raw_blocks.append(blk)
            if parent[p] >= 0 or children[p] >= 2:
                cuts.add(p)

    block_sets = sorted(tuple(sorted({w for e in blk for w in e})) for blk in raw_blocks)
    tree_edges = tuple(
        sorted((bi, v) for bi, blk in enumerate(block_sets) for v in blk if v in cuts)
    )
    return BlockDecomposition(tuple(block_sets), frozenset(cuts), tree_edges)


def power_graph(g: Graph, t: int) -> Graph:
    """Graph on the same vertices joining every pair at distance <= t."""
    if t < 1:
        raise ValueError(f"power {t} must be >= 1")
    if t == 1:
        return Graph(g.n, g.adj)
    edges = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if 0 < dist[v] <= t:
                edges.append((u, v))
    return from_edges(g.n, edges)


def cartesian_product(gs: list[Graph]) -> Graph:
    """Cartesian product; tuples are encoded mixed-radix with the first
    factor most significant, so vertex (u_1,..,u_m) maps to
    ((u_1*n_2 + u_2)*n_3 + ...) + u_m.
    """
    if not gs:
        raise EmptyFactor("product of zero graphs")
    if any(f.n == 0 for f in gs):
        raise EmptyFactor("product factor with no vertices")
    sizes = [f.n for f in gs]
    strides = [1] * len(gs)
    for j in range(len(gs) - 2, -1, -1):
        strides[j] = strides[j + 1] * sizes[j + 1]
    total = strides[0] * sizes[0]
    edges = []
    for idx in range(total):
        rem = idx
        for j, f in enumerate(gs):
            coord = rem // strides[j]
            rem %= strides[j]
            base = idx - coord * strides[j]
            for w in f.adj[coord]:
                other = base + w * strides[j]
                if other > idx:
                    edges.append((idx, other))
    return from_edges(total, edges)
