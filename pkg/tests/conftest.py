import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hypothesis import strategies as st

from fastrobber.generators import graph_from_mask, pair_order


@st.composite
def graphs(draw, min_n=1, max_n=7, connected_only=False):
    """Random labeled graphs via adjacency masks."""
    from oracles import naive_connected

    n = draw(st.integers(min_value=min_n, max_value=max_n))
    npairs = len(pair_order(n))
    mask = draw(st.integers(min_value=0, max_value=(1 << npairs) - 1))
    g = graph_from_mask(n, mask)
    if connected_only and not naive_connected(g):
        # patch up: chain the components together
        comps = []
        seen = set()
        for v in range(n):
            if v not in seen:
                stack = [v]
                comp = {v}
                while stack:
                    x = stack.pop()
                    for w in g.adj[x]:
                        if w not in comp:
                            comp.add(w)
                            stack.append(w)
                seen |= comp
                comps.append(min(comp))
        extra = [(comps[i], comps[i + 1]) for i in range(len(comps) - 1)]
        from fastrobber.graph import from_edges

        g = from_edges(n, list(g.edges()) + extra)
    return g
