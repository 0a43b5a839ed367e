"""Simple undirected graphs on vertex set {0..n-1} with bitset adjacency.

Vertices are dense integers so that induced subgraphs can carry an explicit
old-index map and equations over subgraphs can be re-indexed into the parent
graph. Adjacency is stored as one Python integer bitmask per vertex, which
keeps neighborhood algebra (intersections, complements within a vertex
subset) cheap even for a few thousand vertices. Graphs are immutable; every
operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphParseError(ValueError):
    """Raised when a textual graph description cannot be parsed."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the bitmask of neighbors of ``v``. Adjacency is symmetric
    and loop-free by construction.
    """

    n: int
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from a vertex count and an edge list.

        Duplicate edges collapse to one. Raises ValueError on out-of-range
        endpoints or self-loops.
        """
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return Graph(n, tuple(masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(higher):
                out.append((u, v))
        return out

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2


# ---------------------------------------------------------------------------
# parsing


def parse_graph(text: str, format: str = "edge-list") -> Graph:
    """Parse a graph from text in ``edge-list`` or ``graph6`` format."""
    if format == "edge-list":
        return parse_edge_list(text)
    if format == "graph6":
        return parse_graph6(text)
    raise GraphParseError(f"unknown graph format {format!r}")


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line "n", then lines "u v".

    The explicit vertex count makes isolated vertices representable. Blank
    lines are ignored. Errors name the offending 1-based line number.
    """
    n = None
    masks: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphParseError(
                    f"line {lineno}: expected vertex count, got {line!r}"
                ) from None
            if n < 0:
                raise GraphParseError(f"line {lineno}: vertex count must be >= 0")
            masks = [0] * n
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(
                f"line {lineno}: expected an edge 'u v', got {line!r}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(
                f"line {lineno}: non-integer vertex in {line!r}"
            ) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(
                f"line {lineno}: vertex index out of range (n={n}) in {line!r}"
            )
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    if n is None:
        raise GraphParseError("line 1: missing vertex count")
    return Graph(n, tuple(masks))


def parse_graph6(text: str) -> Graph:
    """Parse a graph in graph6 format (read-only input format).

    Accepts a single graph6 line, optionally prefixed with the standard
    ">>graph6<<" header.
    """
    line = ""
    for raw in text.splitlines():
        if raw.strip():
            line = raw.strip()
            break
    if not line:
        raise GraphParseError("empty graph6 input")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in line]
    if any(b < 0 or b > 63 for b in data):
        raise GraphParseError("graph6: byte out of printable range")
    n, pos = _graph6_order(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise GraphParseError(
            f"graph6: expected {need} data bytes for n={n}, got {len(data) - pos}"
        )
    bits = []
    for b in data[pos:]:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    return Graph(n, tuple(masks))


def _graph6_order(data: list[int]) -> tuple[int, int]:
    if not data:
        raise GraphParseError("graph6: missing order")
    if data[0] < 63:
        return data[0], 1
    if len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise GraphParseError("graph6: truncated 3-byte order")
        return (data[1] << 12) | (data[2] << 6) | data[3], 4
    if len(data) < 8:
        raise GraphParseError("graph6: truncated 6-byte order")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | b
    return n, 8


# ---------------------------------------------------------------------------
# elementary operations


def complement(g: Graph) -> Graph:
    """The graph on the same vertices where distinct u, v are adjacent iff
    they are nonadjacent in ``g``."""
    full = g.full_mask
    masks = tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n))
    return Graph(g.n, masks)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """The subgraph induced by vertex set ``s``.

    Returns (subgraph, vertex_map) where vertex_map is the sorted listing of
    ``s``: new index i corresponds to old vertex vertex_map[i].
    """
    vmap = tuple(sorted(set(s)))
    if vmap and not (0 <= vmap[0] and vmap[-1] < g.n):
        raise ValueError(f"vertex set not within 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(vmap)}
    masks = []
    for u in vmap:
        m = 0
        for w in iter_bits(g.adj[u]):
            if w in pos:
                m |= 1 << pos[w]
        masks.append(m)
    return Graph(len(vmap), tuple(masks)), vmap


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Vertex bitmasks of the connected components of g[within].

    Components are listed in increasing order of their lowest vertex.
    """
    rem = g.full_mask if within is None else within
    blocks = []
    while rem:
        start = rem & -rem
        comp = 0
        frontier = start
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rem & ~comp
        blocks.append(comp)
        rem &= ~comp
    return blocks


def co_component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Vertex bitmasks of the co-components (components of the complement)
    of g[within], in increasing order of their lowest vertex."""
    rem = g.full_mask if within is None else within
    blocks = []
    while rem:
        start = rem & -rem
        comp = 0
        frontier = start
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rem & ~g.adj[v] & ~(1 << v)
            frontier = nxt & ~comp
        blocks.append(comp)
        rem &= ~comp
    return blocks


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex set into maximal connected subgraphs."""
    return [frozenset(iter_bits(b)) for b in component_masks(g)]


def co_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex set by connected components of the complement."""
    return [frozenset(iter_bits(b)) for b in co_component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def is_co_connected(g: Graph) -> bool:
    return len(co_component_masks(g)) <= 1


def delete_closed_neighborhood(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    """The subgraph induced by the vertices outside N[v], with its vertex map."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    keep = g.full_mask & ~g.adj[v] & ~(1 << v)
    return induced_subgraph(g, iter_bits(keep))


# ---------------------------------------------------------------------------
# induced-subgraph recognition
#
# All three predicates perform exhaustive search over vertex tuples; the
# loops below are pruned orderings of the naive O(n^4)/O(n^5) scans.


def is_claw_free(g: Graph) -> bool:
    """True iff g has no induced K_{1,3}."""
    for c in range(g.n):
        nbrs = g.adj[c]
        for d in iter_bits(nbrs):
            rest = nbrs & ~g.adj[d] & ~((1 << (d + 1)) - 1)
            for e in iter_bits(rest):
                if rest & ~g.adj[e] & ~((1 << (e + 1)) - 1):
                    return False
    return True


def is_fork_free(g: Graph) -> bool:
    """True iff g has no induced fork (a claw with one edge subdivided once).

    A fork consists of a center c adjacent to pairwise-nonadjacent b, d, e,
    plus a fifth vertex adjacent to b only.
    """
    for c in range(g.n):
        nbrs = g.adj[c]
        for b in iter_bits(nbrs):
            others = nbrs & ~g.adj[b] & ~(1 << b)
            for d in iter_bits(others):
                rest = others & ~g.adj[d] & ~((1 << (d + 1)) - 1)
                for e in iter_bits(rest):
                    tail = g.adj[b] & ~g.adj[c] & ~(1 << c) & ~g.adj[d] & ~g.adj[e]
                    if tail:
                        return False
    return True


def is_p4_free(g: Graph) -> bool:
    """True iff g has no induced path on four vertices."""
    for b in range(g.n):
        higher = g.adj[b] >> (b + 1) << (b + 1)
        for c in iter_bits(higher):
            ends_b = g.adj[b] & ~g.adj[c] & ~(1 << c)
            ends_c = g.adj[c] & ~g.adj[b] & ~(1 << b)
            for a in iter_bits(ends_b):
                if ends_c & ~g.adj[a]:
                    return False
    return True
