"""Edge-disjoint long-cycle packings and hitting sets for multigraphs."""

from ._lcep import (
    BudgetExceeded,
    Certificate,
    ClaimViolation,
    InputError,
    MultiGraph,
    SolveStats,
    f_bound,
    find_long_cycle,
    k_perfect_separation,
    make_sun,
    oracle_max_packing,
    oracle_min_hitting,
    pack_cycles_dense,
    random_connected_graph,
    shortest_cycle,
    solve,
    sun_order,
    sun_witness_after_deletion,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "Certificate",
    "ClaimViolation",
    "InputError",
    "MultiGraph",
    "SolveStats",
    "f_bound",
    "find_long_cycle",
    "from_edges",
    "k_perfect_separation",
    "make_sun",
    "oracle_max_packing",
    "oracle_min_hitting",
    "pack_cycles_dense",
    "random_connected_graph",
    "shortest_cycle",
    "solve",
    "sun_order",
    "sun_witness_after_deletion",
    "verify",
]


def from_edges(n, edges):
    """Build a MultiGraph on n vertices; edge ids follow the order of `edges`."""
    g = MultiGraph(n)
    for u, v in edges:
        g.add_edge(u, v)
    return g
