"""Well-covering systems of graphs over exact rational arithmetic.

A graph is well-covered when all its maximal independent sets have the same
size, and w-well-covered when they have the same total weight under a vertex
weighting w. The well-covered weightings of a graph form a vector space; a
well-covering system is a homogeneous linear system whose solution set is
exactly that space. This package computes such systems, their dimensions and
null-space bases with exact rational arithmetic, via a capped brute force,
a modular-decomposition pipeline, an elimination-free fast path for graphs
without induced 4-vertex paths, an anti-neighborhood reduction, and a
pipeline for fork-free graphs.
"""

from .graph import (
    Graph,
    GraphParseError,
    co_components,
    complement,
    connected_components,
    delete_closed_neighborhood,
    induced_subgraph,
    is_claw_free,
    is_co_connected,
    is_connected,
    is_fork_free,
    is_p4_free,
    parse_graph,
)
from .independent_sets import (
    DEFAULT_MIS_CAP,
    CapExceededError,
    MISList,
    enumerate_mis,
    greedy_mis,
    is_well_covered_bruteforce,
)
from .linalg import (
    Basis,
    LinearSystem,
    WeightVector,
    basis_from_json,
    basis_to_json,
    empty_system,
    evaluate,
    extract_independent_subsystem,
    format_equation,
    make_system,
    null_space_basis,
    rank,
    same_solution_space,
    system_from_json,
    system_to_json,
    system_to_text,
)
from .modular import (
    MDNode,
    is_module,
    is_prime,
    maximal_strong_modules,
    md_tree,
    quotient,
)
from .systems import (
    SolverConfig,
    StrategyError,
    anti_neighborhood_system,
    bruteforce_system,
    cograph_system,
    combine_disjoint_union,
    combine_join,
    forkfree_system,
    is_w_well_covered,
    is_well_covered,
    lift_quotient_system,
    lift_subgraph_system,
    modular_system,
    resolve_strategy,
    well_covered_dimension,
    well_covering_system,
)

__all__ = [
    "Basis",
    "CapExceededError",
    "DEFAULT_MIS_CAP",
    "Graph",
    "GraphParseError",
    "LinearSystem",
    "MDNode",
    "MISList",
    "SolverConfig",
    "StrategyError",
    "WeightVector",
    "anti_neighborhood_system",
    "basis_from_json",
    "basis_to_json",
    "bruteforce_system",
    "co_components",
    "cograph_system",
    "combine_disjoint_union",
    "combine_join",
    "complement",
    "connected_components",
    "delete_closed_neighborhood",
    "empty_system",
    "enumerate_mis",
    "evaluate",
    "extract_independent_subsystem",
    "forkfree_system",
    "format_equation",
    "greedy_mis",
    "induced_subgraph",
    "is_claw_free",
    "is_co_connected",
    "is_connected",
    "is_fork_free",
    "is_module",
    "is_p4_free",
    "is_prime",
    "is_w_well_covered",
    "is_well_covered",
    "is_well_covered_bruteforce",
    "lift_quotient_system",
    "lift_subgraph_system",
    "make_system",
    "maximal_strong_modules",
    "md_tree",
    "modular_system",
    "null_space_basis",
    "parse_graph",
    "quotient",
    "rank",
    "resolve_strategy",
    "same_solution_space",
    "system_from_json",
    "system_to_json",
    "system_to_text",
    "well_covered_dimension",
    "well_covering_system",
]

__version__ = "0.1.0"
