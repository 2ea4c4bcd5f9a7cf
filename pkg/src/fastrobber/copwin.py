"""Structural test for whether a single cop suffices against the
unbounded-speed robber.

One cop wins exactly when every block of the graph is dominated by one of
its vertices and no two blocks form a corridor whose exits both escape
domination by the connecting cut vertices.  Checking blocks costs O(m^2)
per block via exhaustive search and the corridor scan is quadratic in the
number of holes, so the whole decision stays within O(n^2) at this scale.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import NotConnected
from .graph import BlockDecomposition, Graph, block_decomposition, is_connected


@dataclass(frozen=True)
class DirectedHole:
    """A block together with one of its cut vertices that fails to dominate it."""

    block_index: int
    cut_vertex: int


@dataclass(frozen=True)
class OneCopVerdict:
    is_copwin: bool
    bad_block: int | None = None  # index of a block no single vertex dominates
    hallway: tuple[DirectedHole, DirectedHole] | None = None

    def __post_init__(self) -> None:
        if self.is_copwin and (self.bad_block is not None or self.hallway is not None):
            raise ValueError("a winning verdict carries no witness")
        if not self.is_copwin and self.bad_block is None and self.hallway is None:
            raise ValueError("a losing verdict needs a witness")


def block_dominating_vertices(g: Graph, block: Iterable[int]) -> frozenset[int]:
    """Vertices of the block adjacent (within the block) to all other block
    vertices."""
    blk = set(block)
    out = set()
    for u in blk:
        nbrs = set(g.adj[u])
        if all(w == u or w in nbrs for w in blk):
            out.add(u)
    return frozenset(out)


def directed_holes(g: Graph, dec: BlockDecomposition) -> list[DirectedHole]:
    """Every (block, cut vertex) incidence where the cut vertex does not
    dominate the block.  Bridge blocks never qualify: either endpoint
    dominates a single edge."""
    holes = []
    for bi, v in dec.tree_edges:
        blk = dec.blocks[bi]
        nbrs = set(g.adj[v])
        if any(w != v and w not in nbrs for w in blk):
            holes.append(DirectedHole(bi, v))
    return holes


def _block_tree_path(dec: BlockDecomposition, src_block: int, dst_block: int) -> list[int] | None:
    """Cut vertices along the unique block-tree path from src to dst.

    Nodes are encoded as block indices and, above them, offsets for cut
    vertices; returns the cut-vertex sequence (exits src first, enters dst
    last) or None when the blocks are disconnected in the tree.
    """
    nb = len(dec.blocks)
    cut_ids = {v: nb + i for i, v in enumerate(sorted(dec.cut_vertices))}
    adjacency: dict[int, list[int]] = {}
    for bi, v in dec.tree_edges:
        adjacency.setdefault(bi, []).append(cut_ids[v])
        adjacency.setdefault(cut_ids[v], []).append(bi)
    prev = {src_block: src_block}
    queue = deque([src_block])
    while queue:
        node = queue.popleft()
        if node == dst_block:
            break
        for nxt in adjacency.get(node, ()):
            if nxt not in prev:
                prev[nxt] = node
                queue.append(nxt)
    if dst_block not in prev:
        return None
    path = [dst_block]
    while path[-1] != src_block:
        path.append(prev[path[-1]])
    path.reverse()
    id_to_cut = {ci: v for v, ci in cut_ids.items()}
    return [id_to_cut[x] for x in path if x >= nb]


def find_hallway(
    g: Graph, dec: BlockDecomposition, holes: list[DirectedHole]
) -> tuple[DirectedHole, DirectedHole] | None:
    """First pair of distinct blocks whose block-tree path exits the one and
    enters the other through hole cut vertices; None when no such pair
    exists.  Pairs are scanned in block-index order for reproducibility."""
    by_block: dict[int, set[int]] = {}
    for h in holes:
        by_block.setdefault(h.block_index, set()).add(h.cut_vertex)
    blocks = sorted(by_block)
    for ai in range(len(blocks)):
        for bi in range(ai + 1, len(blocks)):
            a, b = blocks[ai], blocks[bi]
            cuts = _block_tree_path(dec, a, b)
            if cuts and cuts[0] in by_block[a] and cuts[-1] in by_block[b]:
                return (DirectedHole(a, cuts[0]), DirectedHole(b, cuts[-1]))
    return None


def decide_one_cop(g: Graph) -> OneCopVerdict:
    """Does one cop suffice?  Negative verdicts carry a witness: the first
    block with domination number >= 2, or else a hallway pair."""
    if not is_connected(g):
        raise NotConnected("the one-cop test applies to connected graphs")
    if g.n <= 2:
        return OneCopVerdict(True)
    dec = block_decomposition(g)
    for bi, blk in enumerate(dec.blocks):
        if not block_dominating_vertices(g, blk):
            return OneCopVerdict(False, bad_block=bi)
    hw = find_hallway(g, dec, directed_holes(g, dec))
    if hw is not None:
        return OneCopVerdict(False, hallway=hw)
    return OneCopVerdict(True)
