"""Construction of well-covering systems.

A well-covering system of a graph is a homogeneous linear system, with one
variable per vertex, whose solution set is exactly the space of vertex
weightings under which all maximal independent sets have the same total
weight. This module builds such systems along several routes:

* ``bruteforce_system``: enumerate all maximal independent sets and chain
  consecutive weight-difference equations. Always sound; exponential in the
  worst case, so it is capped.
* ``modular_system``: walk the modular decomposition tree bottom-up. A
  disconnected graph takes the union of its components' systems; a join
  takes the union of the co-components' systems plus chained equations
  between one maximal independent set per co-component; a prime quotient is
  handed to a pluggable base solver and its equations are re-expanded by
  substituting, for each quotient vertex, the sum over a maximal independent
  set of the corresponding module. Row reduction after every join and prime
  step keeps the system at most n equations.
* ``cograph_system``: the same tree walk for graphs without induced 4-vertex
  paths, where only parallel and series nodes occur and a counting argument
  bounds the size by n - 1 with no row reduction at all.
* ``anti_neighborhood_system``: combine systems of the graphs G - N[v], one
  per vertex v, with chained equations relating the sets I_v + {v}.
* ``forkfree_system``: for graphs with no induced fork. Prime quotients are
  solved through the anti-neighborhood reduction, whose subproblems have
  claw-free prime quotients and bottom out at the configured base solver.

All constructions preserve unit coefficients (-1, 0, 1) when their inputs
are unit, and every produced system is a well-covering system of its graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .graph import (
    Graph,
    co_component_masks,
    component_masks,
    delete_closed_neighborhood,
    induced_subgraph,
    is_fork_free,
    is_p4_free,
    iter_bits,
)
from .independent_sets import (
    DEFAULT_MIS_CAP,
    CapExceededError,
    enumerate_mis,
    greedy_mis,
)
from .linalg import (
    Coeff,
    LinearSystem,
    WeightVector,
    empty_system,
    evaluate,
    extract_independent_subsystem,
    rank,
)
from .modular import MDNode, PARALLEL, SERIES, md_tree

STRATEGIES = ("auto", "bruteforce", "cograph", "modular", "forkfree")
BASE_SOLVERS = ("bruteforce", "claw-free-plugin")


class StrategyError(RuntimeError):
    """Raised when a solving strategy's preconditions do not hold."""


@dataclass
class SolverConfig:
    """Selects a strategy and the base solver used on prime graphs.

    ``claw_free_plugin`` may hold a callable mapping a claw-free graph to a
    well-covering system of it; its output is always row-reduced before use.
    """

    strategy: str = "auto"
    base_solver: str = "bruteforce"
    mis_cap: int = DEFAULT_MIS_CAP
    claw_free_plugin: Callable[[Graph], LinearSystem] | None = None

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.base_solver not in BASE_SOLVERS:
            raise ValueError(f"unknown base solver {self.base_solver!r}")
        if self.mis_cap < 1:
            raise ValueError("mis_cap must be >= 1")
        if self.base_solver == "claw-free-plugin" and self.claw_free_plugin is None:
            raise ValueError("claw-free-plugin selected but no plugin given")


def _diff_row(n: int, plus: Iterable[int], minus: Iterable[int]) -> tuple[int, ...]:
    """Indicator difference row; coefficients stay in {-1, 0, 1}."""
    row = [0] * n
    for v in plus:
        row[v] += 1
    for v in minus:
        row[v] -= 1
    return tuple(row)


def bruteforce_system(g: Graph, cap: int = DEFAULT_MIS_CAP) -> LinearSystem:
    """Chain equations between consecutive maximal independent sets.

    Enumerates all maximal independent sets in canonical order and emits the
    k-1 consecutive weight-difference equations. Raises CapExceededError
    when the enumeration does not finish under ``cap``.
    """
    mis = enumerate_mis(g, cap)
    if not mis.complete:
        raise CapExceededError(
            f"maximal independent set cap {cap} exceeded; "
            f"brute-force system unavailable"
        )
    rows = []
    tags = []
    for i in range(len(mis.sets) - 1):
        rows.append(_diff_row(g.n, mis.sets[i], mis.sets[i + 1]))
        tags.append(f"mis-diff i={i + 1}")
    return LinearSystem(g.n, tuple(rows), tuple(tags))


def lift_subgraph_system(
    sub: LinearSystem, vertex_map: Sequence[int], host_n: int
) -> LinearSystem:
    """Re-index a subgraph's system into host-graph variables.

    The coefficient at sub-index i moves to host index vertex_map[i]; all
    other host coefficients are zero. Tags are preserved.
    """
    vmap = tuple(vertex_map)
    if len(vmap) != sub.num_vars:
        raise ValueError(
            f"vertex map of length {len(vmap)} for a system over "
            f"{sub.num_vars} variables"
        )
    if len(set(vmap)) != len(vmap):
        raise ValueError("vertex map entries must be distinct")
    if any(not 0 <= v < host_n for v in vmap):
        raise ValueError(f"vertex map entry out of range for host_n={host_n}")
    rows = []
    for row in sub.rows:
        out: list[Coeff] = [0] * host_n
        for i, c in enumerate(row):
            out[vmap[i]] = c
        rows.append(tuple(out))
    return LinearSystem(host_n, tuple(rows), sub.tags)


def _check_maps_partition(maps: Sequence[Sequence[int]], host_n: int) -> None:
    seen: set[int] = set()
    for vmap in maps:
        for v in vmap:
            if v in seen:
                raise ValueError(f"vertex {v} appears in two parts")
            seen.add(v)
    if seen != set(range(host_n)):
        raise ValueError("part maps leave a gap in the host vertex set")


def combine_disjoint_union(
    parts: Sequence[tuple[LinearSystem, Sequence[int]]], host_n: int
) -> LinearSystem:
    """Union of the parts' systems, lifted into host variables.

    Sound when the parts are the connected components of the host graph:
    a vertex set meets every component in a maximal independent set exactly
    when it is maximal overall, so no extra equations are needed.
    """
    _check_maps_partition([vmap for _, vmap in parts], host_n)
    rows: list[tuple[Coeff, ...]] = []
    tags: list[str] = []
    for sub, vmap in parts:
        lifted = lift_subgraph_system(sub, vmap, host_n)
        rows.extend(lifted.rows)
        tags.extend(lifted.tags)
    return LinearSystem(host_n, tuple(rows), tuple(tags))


def combine_join(
    parts: Sequence[tuple[LinearSystem, Sequence[int], Iterable[int]]],
    g: Graph,
) -> LinearSystem:
    """Systems of the co-components plus chained set-weight equations.

    ``parts`` lists (system, vertex_map, mis) per co-component, with ``mis``
    a maximal independent set of that part given in host indices. Any
    maximal independent set of the host graph lives inside a single
    co-component, which is what makes the k-1 chained equations sufficient.
    """
    if len(parts) < 2:
        raise ValueError("a join needs at least two parts")
    host_n = g.n
    _check_maps_partition([vmap for _, vmap, _ in parts], host_n)
    mis_sets = []
    for _, vmap, mis in parts:
        mis_set = frozenset(mis)
        part_set = set(vmap)
        if not mis_set <= part_set:
            raise ValueError("independent set not contained in its part")
        for u in mis_set:
            for w in mis_set:
                if w > u and g.has_edge(u, w):
                    raise ValueError("set is not independent in its part")
        for v in part_set - mis_set:
            if not any(g.has_edge(v, u) for u in mis_set):
                raise ValueError(
                    "independent set not maximal in its part"
                )
        mis_sets.append(mis_set)
    rows: list[tuple[Coeff, ...]] = []
    tags: list[str] = []
    for sub, vmap, _ in parts:
        lifted = lift_subgraph_system(sub, vmap, host_n)
        rows.extend(lifted.rows)
        tags.extend(lifted.tags)
    for j in range(len(parts) - 1):
        rows.append(_diff_row(host_n, mis_sets[j], mis_sets[j + 1]))
        tags.append(f"join-eq j={j + 1}")
    return LinearSystem(host_n, tuple(rows), tuple(tags))


def lift_quotient_system(
    quotient_sys: LinearSystem,
    module_mis: Sequence[Iterable[int]],
    host_n: int,
) -> LinearSystem:
    """Substitute module independent-set sums for quotient variables.

    Each quotient equation's coefficient a_j spreads onto all host variables
    in module_mis[j]. Sound because a maximal independent set of the host
    graph meets module j either not at all or in a maximal independent set
    of the module, and the met modules form a maximal independent set of the
    quotient.
    """
    sets = [frozenset(s) for s in module_mis]
    if len(sets) != quotient_sys.num_vars:
        raise ValueError(
            f"{len(sets)} module sets for a quotient system over "
            f"{quotient_sys.num_vars} variables"
        )
    seen: set[int] = set()
    for s in sets:
        if not s:
            raise ValueError("empty module independent set")
        for v in s:
            if not 0 <= v < host_n:
                raise ValueError(f"vertex {v} out of range for host_n={host_n}")
            if v in seen:
                raise ValueError(f"vertex {v} appears in two module sets")
            seen.add(v)
    rows = []
    tags = []
    for row, tag in zip(quotient_sys.rows, quotient_sys.tags):
        out: list[Coeff] = [0] * host_n
        for j, c in enumerate(row):
            if c != 0:
                for v in sets[j]:
                    out[v] = c
        rows.append(tuple(out))
        tags.append(f"subst[{tag}]" if tag else "subst")
    return LinearSystem(host_n, tuple(rows), tuple(tags))


# ---------------------------------------------------------------------------
# modular decomposition pipeline


def _bruteforce_base(cap: int) -> Callable[[Graph], LinearSystem]:
    def solve(h: Graph) -> LinearSystem:
        return extract_independent_subsystem(bruteforce_system(h, cap))

    return solve


def _base_prime_solver(cfg: SolverConfig) -> Callable[[Graph], LinearSystem]:
    """Solver applied to prime quotient graphs; output is always re-reduced."""
    if cfg.base_solver == "claw-free-plugin":
        plugin = cfg.claw_free_plugin

        def solve(h: Graph) -> LinearSystem:
            return extract_independent_subsystem(plugin(h))

        return solve
    return _bruteforce_base(cfg.mis_cap)


def modular_system(
    g: Graph,
    cfg: SolverConfig | None = None,
    prime_solver: Callable[[Graph], LinearSystem] | None = None,
) -> LinearSystem:
    """Bottom-up system construction over the modular decomposition tree.

    Produces a linearly independent well-covering system with at most n
    equations; it is unit whenever the prime solver emits unit systems.
    Row reduction runs after series and prime aggregation; after parallel
    aggregation the size bound already holds combinatorially.
    """
    cfg = cfg or SolverConfig()
    if prime_solver is None:
        prime_solver = _base_prime_solver(cfg)
    if g.n == 0:
        return empty_system(0)
    system, _ = _solve_md_node(g, md_tree(g), prime_solver)
    assert len(system) <= g.n
    return system


def _solve_md_node(
    g: Graph,
    node: MDNode,
    prime_solver: Callable[[Graph], LinearSystem],
) -> tuple[LinearSystem, frozenset[int]]:
    """Solve the subgraph under ``node``.

    Returns (system, mis): the system is over the node's local variables
    (its vertices in ascending host order) and the maximal independent set
    is in host indices.
    """
    if node.is_leaf:
        return empty_system(1), frozenset((node.vertex,))

    sub, vmap = induced_subgraph(g, node.vertex_set)
    pos = {v: i for i, v in enumerate(vmap)}
    child_results = [_solve_md_node(g, c, prime_solver) for c in node.children]
    child_maps = [
        tuple(pos[v] for v in sorted(c.vertex_set)) for c in node.children
    ]

    if node.kind == PARALLEL:
        parts = [
            (res[0], cmap) for res, cmap in zip(child_results, child_maps)
        ]
        system = combine_disjoint_union(parts, sub.n)
        mis = frozenset().union(*(res[1] for res in child_results))
        return system, mis

    if node.kind == SERIES:
        parts = [
            (res[0], cmap, frozenset(pos[v] for v in res[1]))
            for res, cmap in zip(child_results, child_maps)
        ]
        system = extract_independent_subsystem(combine_join(parts, sub))
        return system, child_results[0][1]

    # prime node: solve the quotient, substitute module independent sets,
    # union with the children's systems, then row-reduce.
    quotient_sys = prime_solver(node.quotient)
    if quotient_sys.num_vars != len(node.children):
        raise ValueError(
            "prime solver returned a system over "
            f"{quotient_sys.num_vars} variables for a quotient on "
            f"{len(node.children)} vertices"
        )
    module_mis = [
        frozenset(pos[v] for v in res[1]) for res in child_results
    ]
    rows: list[tuple[Coeff, ...]] = []
    tags: list[str] = []
    for (child_sys, _), cmap in zip(child_results, child_maps):
        lifted = lift_subgraph_system(child_sys, cmap, sub.n)
        rows.extend(lifted.rows)
        tags.extend(lifted.tags)
    substituted = lift_quotient_system(quotient_sys, module_mis, sub.n)
    rows.extend(substituted.rows)
    tags.extend(substituted.tags)
    system = extract_independent_subsystem(
        LinearSystem(sub.n, tuple(rows), tuple(tags))
    )
    quotient_mis = greedy_mis(node.quotient, range(node.quotient.n))
    mis = frozenset().union(
        *(child_results[j][1] for j in quotient_mis)
    )
    return system, mis


# ---------------------------------------------------------------------------
# cograph fast path


def cograph_system(g: Graph) -> LinearSystem:
    """Elimination-free system for graphs with no induced 4-vertex path.

    The decomposition tree of such a graph has only parallel and series
    nodes, and bookkeeping over the tree bounds the number of equations by
    n - 1, so no row reduction is needed. Raises StrategyError on any other
    graph; use the modular or fork-free strategy there.
    """
    if g.n == 0:
        return empty_system(0)

    rows: list[tuple[Coeff, ...]] = []
    tags: list[str] = []
    results: list[int] = []  # stack of mis masks, one per solved subtree
    # Explicit two-phase stack; the tree can be deep for large graphs.
    work: list[tuple[int, int | None]] = [(g.full_mask, None)]
    while work:
        mask, pending = work.pop()
        if pending is None:
            if mask.bit_count() == 1:
                results.append(mask)
                continue
            blocks = component_masks(g, mask)
            if len(blocks) >= 2:
                work.append((0, len(blocks)))  # parallel marker
                for b in reversed(blocks):
                    work.append((b, None))
                continue
            blocks = co_component_masks(g, mask)
            if len(blocks) < 2:
                raise StrategyError(
                    "graph has an induced 4-vertex path; the cograph "
                    "strategy does not apply (use modular or forkfree)"
                )
            work.append((1, len(blocks)))  # series marker
            for b in reversed(blocks):
                work.append((b, None))
        else:
            kind, k = mask, pending
            child_mis = results[-k:]
            del results[-k:]
            if kind == 0:  # parallel: union of child systems, no new rows
                merged = 0
                for m in child_mis:
                    merged |= m
                results.append(merged)
            else:  # series: chain equations between consecutive children
                for j in range(k - 1):
                    rows.append(
                        _diff_row(
                            g.n,
                            iter_bits(child_mis[j]),
                            iter_bits(child_mis[j + 1]),
                        )
                    )
                    tags.append(f"join-eq j={j + 1}")
                results.append(child_mis[0])
    system = LinearSystem(g.n, tuple(rows), tuple(tags))
    assert len(system) <= max(g.n - 1, 0)
    return system


# ---------------------------------------------------------------------------
# anti-neighborhood reduction


def anti_neighborhood_system(
    g: Graph, sub_solver: Callable[[Graph], LinearSystem]
) -> LinearSystem:
    """Combine systems of all G - N[v] with chained equations.

    Every maximal independent set containing v consists of v plus a maximal
    independent set of G - N[v]; the chained equations between the sets
    I_j + {v_j} therefore tie the per-vertex subsystems together into a
    well-covering system of G. Size is the sum of the subsystem sizes plus
    n - 1.
    """
    if g.n == 0:
        return empty_system(0)
    rows: list[tuple[Coeff, ...]] = []
    tags: list[str] = []
    anchored: list[frozenset[int]] = []
    for j in range(g.n):
        gj, vmap = delete_closed_neighborhood(g, j)
        sj = sub_solver(gj)
        if sj.num_vars != gj.n:
            raise ValueError(
                f"sub-solver returned {sj.num_vars} variables for a "
                f"{gj.n}-vertex graph"
            )
        lifted = lift_subgraph_system(sj, vmap, g.n)
        rows.extend(lifted.rows)
        tags.extend(lifted.tags)
        ij = greedy_mis(gj, range(gj.n))
        anchored.append(frozenset(vmap[i] for i in ij) | {j})
    for j in range(g.n - 1):
        rows.append(_diff_row(g.n, anchored[j], anchored[j + 1]))
        tags.append(f"anti-eq j={j + 1}")
    return LinearSystem(g.n, tuple(rows), tuple(tags))


# ---------------------------------------------------------------------------
# fork-free pipeline


def forkfree_system(g: Graph, cfg: SolverConfig | None = None) -> LinearSystem:
    """Unit, linearly independent well-covering system for fork-free graphs.

    The modular walk hands each prime quotient to the anti-neighborhood
    reduction. Deleting a closed neighborhood in a prime fork-free graph
    leaves a graph all of whose prime quotients are claw-free, so those
    subproblems run the modular walk again with the configured base solver
    at the bottom. Row reduction after every aggregation keeps the final
    size at most n.
    """
    cfg = cfg or SolverConfig()
    if not is_fork_free(g):
        raise StrategyError(
            "graph contains an induced fork; the fork-free strategy "
            "does not apply"
        )
    base = _base_prime_solver(cfg)

    def primes_clawfree_solver(h: Graph) -> LinearSystem:
        return modular_system(h, cfg, prime_solver=base)

    def prime_forkfree_solver(h: Graph) -> LinearSystem:
        return extract_independent_subsystem(
            anti_neighborhood_system(h, primes_clawfree_solver)
        )

    system = modular_system(g, cfg, prime_solver=prime_forkfree_solver)
    assert len(system) <= g.n
    return system


# ---------------------------------------------------------------------------
# strategy dispatch and derived queries


def resolve_strategy(g: Graph, cfg: SolverConfig | None = None) -> str:
    """The concrete strategy ``auto`` dispatches to for this graph."""
    cfg = cfg or SolverConfig()
    if cfg.strategy != "auto":
        return cfg.strategy
    if is_p4_free(g):
        return "cograph"
    if is_fork_free(g):
        return "forkfree"
    return "bruteforce"


def well_covering_system(g: Graph, cfg: SolverConfig | None = None) -> LinearSystem:
    """Build a well-covering system with the configured strategy.

    ``auto`` picks the cograph walk for graphs without induced 4-vertex
    paths, the fork-free pipeline for fork-free graphs, and the capped
    brute force otherwise (the only generally sound fallback).
    """
    cfg = cfg or SolverConfig()
    strategy = resolve_strategy(g, cfg)
    if strategy == "bruteforce":
        return bruteforce_system(g, cfg.mis_cap)
    if strategy == "cograph":
        return cograph_system(g)
    if strategy == "modular":
        return modular_system(g, cfg)
    return forkfree_system(g, cfg)


def well_covered_dimension(g: Graph, cfg: SolverConfig | None = None) -> int:
    """Dimension of the space of weightings equalizing all maximal
    independent sets: n minus the rank of any well-covering system."""
    return g.n - rank(well_covering_system(g, cfg))


def is_well_covered(g: Graph, cfg: SolverConfig | None = None) -> bool:
    """True iff all maximal independent sets have the same cardinality,
    tested by evaluating the all-ones weighting on a well-covering system."""
    system = well_covering_system(g, cfg)
    return evaluate(system, (1,) * g.n)


def is_w_well_covered(
    g: Graph,
    w: WeightVector | Sequence[Coeff],
    cfg: SolverConfig | None = None,
) -> bool:
    """True iff all maximal independent sets have equal weight under ``w``."""
    system = well_covering_system(g, cfg)
    return evaluate(system, w)
