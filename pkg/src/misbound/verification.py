"""Exhaustive check of |MIS(G)| <= g(n) over every labelled graph on n vertices.

Graph ``code`` in ``[0, 2**(n(n-1)/2))`` is the edge bitmap decoded by
:func:`misbound.graph.graph_from_code`.  The code space is cut into
contiguous chunks; each chunk yields a partial result and partials are
merged in chunk order, so the certificate does not depend on ``jobs``.
"""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bound import g as bound_g
from .enumeration import EnumAlgorithm, check_theorem, count_mis, enumerate_mis
from .errors import BoundViolation, CapacityError, GraphValidationError
from .formats import encode_graph6
from .graph import Graph, graph_from_code, relabel, upper_pairs
from .rng import XorShift64Star, random_graph

SWEEP_MAX_N = 7
LONG_RUN_MAX_N = 8
CHUNK = 1 << 16


@dataclass(frozen=True)
class BoundCertificate:
    n: int
    graphs_checked: int
    max_count_observed: int
    bound: int
    extremal_labeled_count: int
    extremal_witnesses: tuple[Graph, ...]
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.max_count_observed > self.bound:
            raise BoundViolation(
                f"Theorem 1 violated at n={self.n}: observed {self.max_count_observed} > g(n) = {self.bound}"
            )

    @property
    def passed(self) -> bool:
        return self.max_count_observed <= self.bound

    def to_text(self, elapsed: bool = True) -> str:
        rows = [
            ("n", self.n),
            ("graphs_checked", self.graphs_checked),
            ("max_count_observed", self.max_count_observed),
            ("bound", self.bound),
            ("violations", 0),
            ("extremal_labeled_count", self.extremal_labeled_count),
            ("extremal_classes", len(self.extremal_witnesses)),
        ]
        if elapsed:
            rows.append(("elapsed", f"{self.elapsed:.3f}"))
        return "".join(f"{k}: {v}\n" for k, v in rows)

    def witnesses_graph6(self) -> str:
        return "".join(encode_graph6(w) + "\n" for w in self.extremal_witnesses)


@dataclass
class _Partial:
    graphs_checked: int = 0
    max_count: int = 0
    extremal_codes: list[int] = field(default_factory=list)


def _oracle_counts(n: int, codes: np.ndarray) -> np.ndarray:
    """Subset-scan MIS counts for a batch of graphs, vectorised over graphs."""
    adj = [np.zeros(codes.shape, dtype=np.uint64) for _ in range(n)]
    for k, (u, v) in enumerate(upper_pairs(n)):
        edge = (codes >> np.uint64(k)) & np.uint64(1)
        adj[u] |= edge << np.uint64(v)
        adj[v] |= edge << np.uint64(u)
    counts = np.zeros(codes.shape, dtype=np.int64)
    for s in range(1 << n):
        ok = np.ones(codes.shape, dtype=bool)
        s64 = np.uint64(s)
        for v in range(n):
            touches = (adj[v] & s64) != 0
            ok &= ~touches if s >> v & 1 else touches
        counts += ok
    return counts


def _sweep_chunk(args: tuple[int, str, int, int]) -> _Partial:
    n, algo, start, stop = args
    bound = bound_g(n)
    if algo == EnumAlgorithm.ORACLE.value:
        codes = np.arange(start, stop, dtype=np.uint64)
        counts = _oracle_counts(n, codes)
        top = int(counts.max())
        check_theorem(n, top)
        extremal = [int(c) for c in codes[counts == bound]]
        return _Partial(stop - start, top, extremal)
    part = _Partial()
    for code in range(start, stop):
        c = count_mis(graph_from_code(n, code), algo)
        if c > part.max_count:
            part.max_count = c
        if c == bound:
            part.extremal_codes.append(code)
    part.graphs_checked = stop - start
    return part


def _edge_sequence_key(g: Graph) -> int:
    # Pair 0 most significant, so integer order is lexicographic bit order.
    key = 0
    for u, v in upper_pairs(g.n):
        key = key << 1 | (g.adj[u] >> v & 1)
    return key


def canonical_form(g: Graph) -> Graph:
    """Lexicographically smallest edge bitmap over all vertex permutations."""
    return min(
        (relabel(g, p) for p in itertools.permutations(range(g.n))),
        key=_edge_sequence_key,
    )


def isomorphism_classes(graphs) -> list[Graph]:
    """Canonical representatives of the distinct classes, sorted by canonical key.

    Each new class's whole orbit is recorded, so every other member of the
    class is skipped without another n! search.
    """
    seen: set[Graph] = set()
    reps = []
    for h in graphs:
        if h in seen:
            continue
        orbit = {relabel(h, p) for p in itertools.permutations(range(h.n))}
        seen |= orbit
        reps.append(min(orbit, key=_edge_sequence_key))
    return sorted(reps, key=_edge_sequence_key)


def sweep_all_graphs(
    n: int,
    algo: EnumAlgorithm | str = EnumAlgorithm.ORACLE,
    jobs: int | None = None,
    long_run: bool = False,
) -> BoundCertificate:
    """Count MIS for every labelled graph on ``n`` vertices and certify the bound."""
    algo = EnumAlgorithm(algo)
    if n < 0:
        raise GraphValidationError("n must be non-negative")
    cap = LONG_RUN_MAX_N if long_run else SWEEP_MAX_N
    if n > cap:
        hint = "" if long_run or n > LONG_RUN_MAX_N else " (n=8 needs the long-run flag)"
        raise CapacityError(f"full sweep capped at n={cap}{hint}")
    jobs = jobs or os.cpu_count() or 1
    t0 = time.perf_counter()
    total = 1 << len(upper_pairs(n))
    tasks = [(n, algo.value, s, min(total, s + CHUNK)) for s in range(0, total, CHUNK)]
    if jobs == 1 or len(tasks) == 1:
        partials = [_sweep_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_sweep_chunk, tasks))
    codes = [c for p in partials for c in p.extremal_codes]
    witnesses = isomorphism_classes(graph_from_code(n, c) for c in codes)
    return BoundCertificate(
        n=n,
        graphs_checked=sum(p.graphs_checked for p in partials),
        max_count_observed=max(p.max_count for p in partials),
        bound=bound_g(n),
        extremal_labeled_count=len(codes),
        extremal_witnesses=tuple(witnesses),
        elapsed=time.perf_counter() - t0,
    )


def extremal_census(
    n: int, algo: EnumAlgorithm | str = EnumAlgorithm.ORACLE, jobs: int | None = None
) -> list[Graph]:
    """One canonical graph per isomorphism class with exactly g(n) maximal independent sets."""
    if n > SWEEP_MAX_N:
        raise CapacityError(f"census capped at n={SWEEP_MAX_N}")
    return list(sweep_all_graphs(n, algo, jobs).extremal_witnesses)


def spot_check_random(n: int, samples: int, seed: int) -> bool:
    """Check the bound and enumerator agreement on seeded G(n, 1/2) samples."""
    if not 8 <= n <= 20:
        raise GraphValidationError("spot checks cover 8 <= n <= 20")
    rng = XorShift64Star(seed)
    bound = bound_g(n)
    for _ in range(samples):
        graph = random_graph(n, rng)
        try:
            reports = [enumerate_mis(graph, a) for a in EnumAlgorithm]
        except BoundViolation:
            return False
        if any(r.sets != reports[0].sets for r in reports):
            return False
        if reports[0].count > bound:
            return False
    return True
