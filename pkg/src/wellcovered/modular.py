"""Modular decomposition: strong modules, quotients, and the decomposition tree.

A module is a vertex set whose members are indistinguishable from outside:
every other vertex sees all of the module or none of it. Decomposing a graph
recursively by its maximal strong modules yields a rooted tree whose leaves
are the vertices and whose internal nodes are labeled parallel (graph
disconnected), series (complement disconnected), or prime (both connected;
the quotient has only trivial modules).

The strong-module computation follows the definition directly: the smallest
module containing a vertex pair is obtained by closure under splitters, and
in the connected co-connected case the maximal proper module containing a
vertex is the union of the proper smallest modules through it. This is a
polynomial-time computation chosen for auditability rather than the
linear-time algorithms known for this problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import (
    Graph,
    co_component_masks,
    component_masks,
    induced_subgraph,
    iter_bits,
    mask_of,
)

LEAF = "leaf"
PARALLEL = "parallel"
SERIES = "series"
PRIME = "prime"


@dataclass(frozen=True)
class MDNode:
    """A node of the modular decomposition tree.

    ``vertex_set`` holds the original vertices below this node. Internal
    nodes carry the quotient graph on one representative per child together
    with ``reps``, the chosen representative (lowest original index) for
    each quotient vertex.
    """

    kind: str
    vertex: int | None
    children: tuple["MDNode", ...]
    vertex_set: frozenset[int]
    quotient: Graph | None
    reps: tuple[int, ...] | None

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF

    def iter_nodes(self) -> Iterator["MDNode"]:
        yield self
        for child in self.children:
            yield from child.iter_nodes()

    def leaves(self) -> list["MDNode"]:
        return [t for t in self.iter_nodes() if t.is_leaf]

    def internal_nodes(self) -> list["MDNode"]:
        return [t for t in self.iter_nodes() if not t.is_leaf]


def is_module(g: Graph, m: Iterable[int]) -> bool:
    """True iff every outside vertex is complete or anticomplete to ``m``."""
    mask = mask_of(m)
    if mask == 0:
        raise ValueError("a module must be nonempty")
    if mask & ~g.full_mask:
        raise ValueError(f"vertex set not within 0..{g.n - 1}")
    for v in iter_bits(g.full_mask & ~mask):
        seen = g.adj[v] & mask
        if seen != 0 and seen != mask:
            return False
    return True


def _smallest_module_mask(g: Graph, seed: int, within: int) -> int:
    """Closure of ``seed`` under splitters inside g[within]."""
    m = seed
    while True:
        add = 0
        for v in iter_bits(within & ~m):
            seen = g.adj[v] & m
            if seen != 0 and seen != m:
                add |= 1 << v
        if not add:
            return m
        m |= add


def _strong_module_masks(g: Graph, within: int) -> list[int]:
    """Maximal proper modules of g[within] when it is connected and
    co-connected; they are pairwise disjoint and partition the vertex set."""
    blocks: list[int] = []
    unassigned = within
    while unassigned:
        v = unassigned & -unassigned
        block = v
        for u in iter_bits(within & ~v):
            m = _smallest_module_mask(g, v | (1 << u), within)
            if m != within:
                block |= m
        blocks.append(block)
        unassigned &= ~block
    return sorted(blocks, key=lambda b: b & -b)


def _partition_masks(g: Graph, within: int) -> tuple[str, list[int]]:
    """Kind and maximal strong module masks of g[within] (>= 2 vertices)."""
    comps = component_masks(g, within)
    if len(comps) >= 2:
        return PARALLEL, comps
    cocomps = co_component_masks(g, within)
    if len(cocomps) >= 2:
        return SERIES, cocomps
    return PRIME, _strong_module_masks(g, within)


def maximal_strong_modules(g: Graph) -> list[frozenset[int]]:
    """The unique partition of the vertex set into maximal strong modules.

    For a disconnected graph these are the components; for a graph with
    disconnected complement, the co-components; otherwise the maximal proper
    modules (pairwise disjoint in that case). Requires n >= 2.
    """
    if g.n < 2:
        raise ValueError("maximal strong modules require at least 2 vertices")
    _, blocks = _partition_masks(g, g.full_mask)
    return [frozenset(iter_bits(b)) for b in blocks]


def quotient(
    g: Graph, p: Iterable[Iterable[int]]
) -> tuple[Graph, tuple[int, ...]]:
    """Quotient of ``g`` by a partition into modules.

    Returns the induced subgraph on the lowest-index representative of each
    block, plus the representatives themselves (in ascending order).
    """
    masks = [mask_of(b) for b in p]
    total = 0
    for mask in masks:
        if mask == 0:
            raise ValueError("empty block in partition")
        if mask & total:
            raise ValueError("blocks overlap")
        total |= mask
    if total != g.full_mask:
        raise ValueError("blocks do not cover the vertex set")
    for mask in masks:
        if not is_module(g, iter_bits(mask)):
            raise ValueError(
                f"block {sorted(iter_bits(mask))} is not a module"
            )
    reps = sorted((mask & -mask).bit_length() - 1 for mask in masks)
    sub, vmap = induced_subgraph(g, reps)
    return sub, vmap


def is_prime(g: Graph) -> bool:
    """True iff g and its complement are connected and every module is
    trivial (a singleton or the whole vertex set). One-vertex graphs are not
    prime by convention."""
    if g.n < 2:
        return False
    if len(component_masks(g)) != 1 or len(co_component_masks(g)) != 1:
        return False
    blocks = _strong_module_masks(g, g.full_mask)
    return all(b.bit_count() == 1 for b in blocks)


def md_tree(g: Graph) -> MDNode:
    """The modular decomposition tree of ``g`` (n >= 1).

    A one-vertex graph is a leaf. Otherwise the root is labeled with the
    quotient by the maximal strong modules and the recursion continues into
    each module.
    """
    if g.n < 1:
        raise ValueError("modular decomposition requires at least one vertex")

    def build(within: int) -> MDNode:
        if within.bit_count() == 1:
            v = within.bit_length() - 1
            return MDNode(LEAF, v, (), frozenset((v,)), None, None)
        kind, blocks = _partition_masks(g, within)
        children = tuple(build(b) for b in blocks)
        reps = tuple((b & -b).bit_length() - 1 for b in blocks)
        quot, _ = induced_subgraph(g, reps)
        return MDNode(
            kind, None, children, frozenset(iter_bits(within)), quot, reps
        )

    return build(g.full_mask)
