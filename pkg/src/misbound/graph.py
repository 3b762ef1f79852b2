"""Immutable simple graphs on at most 64 vertices, adjacency stored as bitsets.

A vertex set is a plain ``int`` whose bit ``i`` marks vertex ``i``.  Python
ints already give us union (``|``), intersection (``&``), difference
(``& ~``) and popcount (``int.bit_count``), so no wrapper class is used.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, GraphValidationError

WIDTH = 64

VertexSet = int


def bits(s: VertexSet) -> Iterator[int]:
    """Yield the members of ``s`` in ascending order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def lift(s: VertexSet, index_map: Sequence[int]) -> VertexSet:
    """Translate a vertex set of a subgraph back to the parent's labels."""
    out = 0
    for v in bits(s):
        out |= 1 << index_map[v]
    return out


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[u]`` is the open neighbourhood of ``u`` as a bitset.  Instances are
    immutable and hashable; equality is structural (same labelled graph).
    """

    __slots__ = ("n", "adj")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= WIDTH:
            raise CapacityError(f"graph on {n} vertices exceeds width {WIDTH}")
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphValidationError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row < 0 or row & ~full:
                raise GraphValidationError(f"row {u} has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise GraphValidationError(f"self-loop at vertex {u}")
            for v in bits(row):
                if not adj[v] >> u & 1:
                    raise GraphValidationError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Skips validation; callers guarantee the invariants.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= WIDTH:
        raise CapacityError(f"graph on {n} vertices exceeds width {WIDTH}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphValidationError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


@lru_cache(maxsize=None)
def upper_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs in edge-code order: (0,1), (0,2), (1,2), (0,3), (1,3), ...

    Bit ``k`` of an edge code (least significant first) is the ``k``-th pair.
    graph6 bodies stream the same pairs in the same order.
    """
    return tuple((u, v) for v in range(1, n) for u in range(v))


def graph_from_code(n: int, code: int) -> Graph:
    """Decode an upper-triangle edge bitmap into a graph."""
    pairs = upper_pairs(n)
    if code < 0 or code >> len(pairs):
        raise GraphValidationError(f"edge code {code} out of range for n={n}")
    adj = [0] * n
    k = 0
    while code:
        if code & 1:
            u, v = pairs[k]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        code >>= 1
        k += 1
    return Graph._trusted(n, tuple(adj))


def edge_code(g: Graph) -> int:
    code = 0
    for k, (u, v) in enumerate(upper_pairs(g.n)):
        if g.adj[u] >> v & 1:
            code |= 1 << k
    return code


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise GraphValidationError("vertex count must be non-negative")
    return Graph(n, [0] * n)


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise GraphValidationError("complete graph needs at least one vertex")
    if k > WIDTH:
        raise CapacityError(f"K_{k} exceeds width {WIDTH}")
    full = (1 << k) - 1
    return Graph(k, [full & ~(1 << u) for u in range(k)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphValidationError("path needs at least one vertex")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphValidationError("cycle needs at least three vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Union with ``g2`` relabelled by offset ``g1.n``; no edges between parts."""
    n = g1.n + g2.n
    if n > WIDTH:
        raise CapacityError(f"union has {n} vertices, width is {WIDTH}")
    shift = g1.n
    return Graph._trusted(n, g1.adj + tuple(row << shift for row in g2.adj))


def moon_moser(n: int) -> Graph:
    """The extremal graph M_n: triangles, plus one K_4 (n = 1 mod 3) or K_2 (n = 2 mod 3)."""
    if n < 2:
        raise GraphValidationError("M_n is only defined for n >= 2")
    if n > WIDTH:
        raise CapacityError(f"M_{n} exceeds width {WIDTH}")
    r = n % 3
    if r == 0:
        parts = [3] * (n // 3)
    elif r == 1:
        parts = [4] + [3] * ((n - 4) // 3)
    else:
        parts = [2] + [3] * ((n - 2) // 3)
    g = empty_graph(0)
    for k in parts:
        g = disjoint_union(g, complete_graph(k))
    return g


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``u`` renamed ``perm[u]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphValidationError("perm must be a permutation of 0..n-1")
    adj = [0] * g.n
    for u in range(g.n):
        adj[perm[u]] = vertex_set(perm[v] for v in bits(g.adj[u]))
    return Graph._trusted(g.n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphValidationError(f"vertex {v} out of range for n={g.n}")


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v] | 1 << v


def min_degree_vertex(g: Graph) -> tuple[int, int]:
    """Lowest-indexed vertex of minimum degree, with that degree."""
    if g.n == 0:
        raise GraphValidationError("the null graph has no vertices")
    best_v, best_d = 0, g.adj[0].bit_count()
    for v in range(1, g.n):
        d = g.adj[v].bit_count()
        if d < best_d:
            best_v, best_d = v, d
    return best_v, best_d


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``keep``, relabelled 0..k-1 in ascending order.

    The second element maps new labels to original labels.
    """
    index_map = tuple(bits(keep & g.vertices))
    new_of = {old: new for new, old in enumerate(index_map)}
    adj = []
    for old in index_map:
        row = 0
        for w in bits(g.adj[old] & keep):
            row |= 1 << new_of[w]
        adj.append(row)
    return Graph._trusted(len(index_map), tuple(adj)), index_map


def delete_closed_neighborhood(g: Graph, w: int) -> tuple[Graph, tuple[int, ...]]:
    """G - N[w] together with its new-to-old index map."""
    return induced_subgraph(g, g.vertices & ~closed_neighborhood(g, w))
