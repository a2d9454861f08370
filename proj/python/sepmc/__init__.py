"""Minimal separators, potential maximal cliques and MWIS for P6-free graphs."""

from ._core import (
    Graph,
    clique_number,
    connected_modules,
    find_induced_path,
    full_components,
    generate,
    is_minimal_separator,
    is_module,
    is_pmc,
    is_pt_free,
    maximal_proper_strong_modules,
    minimal_separators,
    mwis,
    parse_edge_list,
    parse_graph6,
    potential_maximal_cliques,
    strong_modules,
    to_edge_list,
    to_graph6,
    verify_bounds,
)

__all__ = [
    "Graph",
    "clique_number",
    "connected_modules",
    "find_induced_path",
    "full_components",
    "generate",
    "is_minimal_separator",
    "is_module",
    "is_pmc",
    "is_pt_free",
    "maximal_proper_strong_modules",
    "minimal_separators",
    "mwis",
    "parse_edge_list",
    "parse_graph6",
    "potential_maximal_cliques",
    "strong_modules",
    "to_edge_list",
    "to_graph6",
    "verify_bounds",
]
