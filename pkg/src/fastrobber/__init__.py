"""Cops and Robber against an unbounded-speed robber.

Exact game solving, the structural one-cop test, expansion and domination
bounds, seeded graph generators, theorem-verification sweeps, a CLI and an
interactive play server.
"""

from .bounds import (
    BoundReport,
    IsoperimetricResult,
    alon_spencer_domination_bound,
    domination_number_exact,
    edge_isoperimetric_exact,
    escape_certificate,
    subset_pick,
    theorem34_bounds,
    theorem42_constants_check,
    vertex_isoperimetric_exact,
)
from .copwin import DirectedHole, OneCopVerdict, decide_one_cop
from .graph import (
    INFINITE,
    BlockDecomposition,
    Graph,
    block_decomposition,
    cartesian_product,
    closed_neighborhood,
    from_edge_list,
    from_edges,
    is_connected,
    power_graph,
    reachable_within,
    removal_components,
    to_edge_list,
)
from .solver import (
    GameConfig,
    GameState,
    SolveResult,
    best_cop_move,
    cop_number,
    heuristic_cop_move,
    legal_cop_moves_single,
    legal_robber_moves,
    placement_wins,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BlockDecomposition",
    "DirectedHole",
    "GameConfig",
    "GameState",
    "Graph",
    "INFINITE",
    "IsoperimetricResult",
    "OneCopVerdict",
    "SolveResult",
    "alon_spencer_domination_bound",
    "best_cop_move",
    "block_decomposition",
    "cartesian_product",
    "closed_neighborhood",
    "cop_number",
    "decide_one_cop",
    "domination_number_exact",
    "edge_isoperimetric_exact",
    "escape_certificate",
    "from_edge_list",
    "from_edges",
    "heuristic_cop_move",
    "is_connected",
    "legal_cop_moves_single",
    "legal_robber_moves",
    "placement_wins",
    "power_graph",
    "reachable_within",
    "removal_components",
    "solve",
    "subset_pick",
    "theorem34_bounds",
    "theorem42_constants_check",
    "to_edge_list",
    "vertex_isoperimetric_exact",
]
