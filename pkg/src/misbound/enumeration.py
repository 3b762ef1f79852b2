"""Maximal independent set enumerators sharing one report type.

Three independent routes to MIS(G):

* ``oracle``    scans every vertex subset and keeps the maximal independent ones.
* ``branching`` picks a minimum-degree vertex v; every maximal independent set
  meets N[v], and removing w from such a set leaves a maximal independent set
  of G - N[w].  So recurse on G - N[w] for each w in N[v] and add w back.
  A set meeting N[v] in several vertices is produced once per vertex, hence
  the deduplication.
* ``pivot``     Bron-Kerbosch with pivoting on the complement graph (maximal
  cliques of the complement are exactly the maximal independent sets).

Every run checks its count against g(n) and raises ``BoundViolation`` on
excess.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .bound import g as bound_g
from .errors import BoundViolation, CapacityError
from .graph import (
    Graph,
    VertexSet,
    bits,
    closed_neighborhood,
    delete_closed_neighborhood,
    lift,
    min_degree_vertex,
)

ORACLE_MAX_N = 25
_ORACLE_CHUNK = 1 << 18


class EnumAlgorithm(str, enum.Enum):
    ORACLE = "oracle"
    BRANCHING = "branching"
    PIVOT = "pivot"


@dataclass(frozen=True)
class EnumStats:
    """Instrumentation counters.

    ``candidates_generated`` counts sets produced before deduplication; for
    the branching enumerator this is measured at the root, where it equals
    the sum over root branches of the sub-results.  ``recursive_calls``
    excludes the top-level call; ``max_depth`` is 0 when nothing recursed.
    ``root_vertex`` and ``root_branches`` are only set by the branching
    enumerator.
    """

    candidates_generated: int = 0
    recursive_calls: int = 0
    max_depth: int = 0
    root_vertex: int | None = None
    root_branches: int = 0


@dataclass(frozen=True)
class MisReport:
    n: int
    sets: tuple[VertexSet, ...]
    stats: EnumStats = field(default_factory=EnumStats)

    @property
    def count(self) -> int:
        return len(self.sets)


def check_theorem(n: int, count: int) -> None:
    bound = bound_g(n)
    if count > bound:
        raise BoundViolation(
            f"Theorem 1 violated: {count} maximal independent sets on {n} vertices, g({n}) = {bound}"
        )


def _report(g: Graph, found, stats: EnumStats) -> MisReport:
    sets = tuple(sorted(found))
    check_theorem(g.n, len(sets))
    return MisReport(g.n, sets, stats)


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not g.adj[u] & s for u in bits(s))


def is_maximal_independent(g: Graph, s: VertexSet) -> bool:
    if not is_independent(g, s):
        return False
    return all(g.adj[v] & s for v in bits(g.vertices & ~s))


# -- oracle -----------------------------------------------------------------


def _oracle_masks(g: Graph) -> np.ndarray:
    # Vectorised over subsets: a subset is kept iff every member has no
    # neighbour inside it and every non-member has one.
    total = 1 << g.n
    keep = []
    for start in range(0, total, _ORACLE_CHUNK):
        subsets = np.arange(start, min(total, start + _ORACLE_CHUNK), dtype=np.uint64)
        ok = np.ones(subsets.shape, dtype=bool)
        for v in range(g.n):
            member = (subsets >> np.uint64(v)) & np.uint64(1) == 1
            touches = subsets & np.uint64(g.adj[v]) != 0
            ok &= member != touches
        keep.append(subsets[ok])
    return np.concatenate(keep)


def enumerate_oracle(g: Graph) -> MisReport:
    if g.n > ORACLE_MAX_N:
        raise CapacityError(f"oracle scans 2^n subsets; n={g.n} exceeds {ORACLE_MAX_N}")
    found = [int(s) for s in _oracle_masks(g)]
    return _report(g, found, EnumStats(candidates_generated=1 << g.n))


# -- branching ----------------------------------------------------------------


class _Counters:
    __slots__ = ("calls", "depth")

    def __init__(self):
        self.calls = 0
        self.depth = 0


def _branch_step(g: Graph, solve) -> set[VertexSet]:
    if g.n == 0:
        return {0}
    v, _ = min_degree_vertex(g)
    out: set[VertexSet] = set()
    for w in bits(closed_neighborhood(g, v)):
        sub, index_map = delete_closed_neighborhood(g, w)
        tag = 1 << w
        for j in solve(sub):
            out.add(lift(j, index_map) | tag)
    return out


def _branch(g: Graph, depth: int, ctr: _Counters) -> set[VertexSet]:
    ctr.calls += 1
    if depth > ctr.depth:
        ctr.depth = depth
    return _branch_step(g, lambda sub: _branch(sub, depth + 1, ctr))


@lru_cache(maxsize=1 << 16)
def _branch_memo(g: Graph) -> frozenset[VertexSet]:
    # Counting only: sweeps revisit the same small subgraphs millions of times.
    return frozenset(_branch_step(g, _branch_memo))


def enumerate_branching(g: Graph) -> MisReport:
    if g.n == 0:
        return _report(g, [0], EnumStats(candidates_generated=1))
    ctr = _Counters()
    v, d = min_degree_vertex(g)
    found: set[VertexSet] = set()
    candidates = 0
    branches = 0
    for w in bits(closed_neighborhood(g, v)):
        sub, index_map = delete_closed_neighborhood(g, w)
        branches += 1
        tag = 1 << w
        child = _branch(sub, 1, ctr)
        candidates += len(child)
        found.update(lift(j, index_map) | tag for j in child)
    assert branches == d + 1
    stats = EnumStats(candidates, ctr.calls, ctr.depth, root_vertex=v, root_branches=branches)
    return _report(g, found, stats)


# -- pivot ------------------------------------------------------------------


def _non_adjacency(g: Graph) -> tuple[int, ...]:
    full = g.vertices
    return tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj))


def _pivot(nadj, r, p, x, depth, ctr, emit) -> None:
    if not p:
        if not x:
            emit(r)
        return
    best, pivot_row = -1, 0
    for u in bits(p | x):
        c = (p & nadj[u]).bit_count()
        if c > best:
            best, pivot_row = c, nadj[u]
    for v in bits(p & ~pivot_row):
        ctr.calls += 1
        if depth + 1 > ctr.depth:
            ctr.depth = depth + 1
        bit = 1 << v
        _pivot(nadj, r | bit, p & nadj[v], x & nadj[v], depth + 1, ctr, emit)
        p &= ~bit
        x |= bit


def enumerate_pivot(g: Graph) -> MisReport:
    found: list[VertexSet] = []
    ctr = _Counters()
    _pivot(_non_adjacency(g), 0, g.vertices, 0, 0, ctr, found.append)
    return _report(g, found, EnumStats(len(found), ctr.calls, ctr.depth))


def _pivot_count(nadj, p, x) -> int:
    if not p:
        return 0 if x else 1
    best, pivot_row = -1, 0
    for u in bits(p | x):
        c = (p & nadj[u]).bit_count()
        if c > best:
            best, pivot_row = c, nadj[u]
    total = 0
    for v in bits(p & ~pivot_row):
        total += _pivot_count(nadj, p & nadj[v], x & nadj[v])
        bit = 1 << v
        p &= ~bit
        x |= bit
    return total


# -- dispatch ---------------------------------------------------------------

ENUMERATORS = {
    EnumAlgorithm.ORACLE: enumerate_oracle,
    EnumAlgorithm.BRANCHING: enumerate_branching,
    EnumAlgorithm.PIVOT: enumerate_pivot,
}


def enumerate_mis(g: Graph, algo: EnumAlgorithm | str = EnumAlgorithm.PIVOT) -> MisReport:
    return ENUMERATORS[EnumAlgorithm(algo)](g)


def count_mis(g: Graph, algo: EnumAlgorithm | str = EnumAlgorithm.PIVOT) -> int:
    """Number of maximal independent sets.

    The pivot route counts without building sets.  The branching route has to
    materialise them to deduplicate; here it caches sub-results per subgraph,
    so no instrumentation is available from this entry point.
    """
    algo = EnumAlgorithm(algo)
    if algo is EnumAlgorithm.PIVOT:
        count = _pivot_count(_non_adjacency(g), g.vertices, 0)
        check_theorem(g.n, count)
        return count
    if algo is EnumAlgorithm.ORACLE and g.n > ORACLE_MAX_N:
        raise CapacityError(f"oracle scans 2^n subsets; n={g.n} exceeds {ORACLE_MAX_N}")
    if algo is EnumAlgorithm.ORACLE:
        count = len(_oracle_masks(g))
        check_theorem(g.n, count)
        return count
    count = len(_branch_memo(g))
    check_theorem(g.n, count)
    return count
