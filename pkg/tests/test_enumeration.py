import random

import pytest
from hypothesis import given, settings

from conftest import all_graphs, graphs, naive_mis, reference_mis
from misbound.bound import g as bound_g
from misbound.enumeration import (
    EnumAlgorithm,
    count_mis,
    enumerate_branching,
    enumerate_mis,
    enumerate_oracle,
    enumerate_pivot,
    is_independent,
    is_maximal_independent,
)
from misbound.errors import BoundViolation, CapacityError
from misbound.graph import (
    bits,
    closed_neighborhood,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_code,
    min_degree_vertex,
    moon_moser,
    path_graph,
    upper_pairs,
    vertex_set,
)
from misbound.rng import random_graphs

ALGOS = list(EnumAlgorithm)
K3 = complete_graph(3)
P3 = path_graph(3)
C5 = cycle_graph(5)
M7 = moon_moser(7)


def test_is_independent_examples():
    assert is_independent(K3, 0b1)
    assert not is_independent(K3, 0b11)
    assert is_independent(M7, vertex_set([0, 4]))


def test_is_maximal_independent_examples():
    assert is_maximal_independent(P3, 0b010)
    assert not is_maximal_independent(P3, 0b001)
    assert is_maximal_independent(P3, 0b101)
    assert not is_maximal_independent(P3, 0b011)


def test_c5_reference_value():
    # the 5 sets {i, i+2 mod 5}, from the tuple brute force
    expected = sorted(vertex_set([i, (i + 2) % 5]) for i in range(5))
    assert naive_mis(C5) == expected
    assert reference_mis(C5) == expected


@pytest.mark.parametrize("algo", ALGOS)
def test_small_examples(algo):
    assert enumerate_mis(empty_graph(0), algo).sets == (0,)
    assert enumerate_mis(K3, algo).sets == (1, 2, 4)
    assert enumerate_mis(C5, algo).count == 5
    assert enumerate_mis(M7, algo).count == 12
    assert enumerate_mis(empty_graph(4), algo).sets == (0b1111,)
    assert count_mis(complete_graph(4), algo) == 4
    assert count_mis(C5, algo) == 5


def test_oracle_stats_and_capacity():
    assert enumerate_oracle(K3).stats.candidates_generated == 8
    with pytest.raises(CapacityError):
        enumerate_oracle(empty_graph(26))
    with pytest.raises(CapacityError):
        count_mis(empty_graph(26), "oracle")


def test_branching_k1():
    r = enumerate_branching(complete_graph(1))
    assert r.sets == (1,)
    assert r.stats.candidates_generated == 1
    assert r.stats.root_branches == 1


def test_branching_k3_trace():
    r = enumerate_branching(K3)
    assert r.count == 3
    assert r.stats.candidates_generated == 3
    assert r.stats.recursive_calls == 3
    assert r.stats.max_depth == 1


def test_branching_p3_trace():
    # root v=0 (degree 1); w=0 leaves {2} -> {0,2}; w=1 leaves nothing -> {1}
    r = enumerate_branching(P3)
    assert r.sets == (0b010, 0b101)
    assert r.stats.root_vertex == 0
    assert r.stats.root_branches == 2
    assert r.stats.candidates_generated == 2


def test_branching_m9():
    assert enumerate_branching(moon_moser(9)).count == 27 == bound_g(9)


def test_count_m10_branching():
    assert count_mis(moon_moser(10), "branching") == 36


def test_pivot_is_duplicate_free():
    r = enumerate_pivot(moon_moser(12))
    assert r.stats.candidates_generated == r.count == 81


@pytest.mark.parametrize("n", range(0, 6))
def test_exhaustive_against_references(n):
    for graph in all_graphs(n):
        expected = tuple(reference_mis(graph))
        for algo in ALGOS:
            assert enumerate_mis(graph, algo).sets == expected


def test_naive_reference_agrees_with_networkx():
    for graph in all_graphs(4):
        assert naive_mis(graph) == reference_mis(graph)


@given(graphs(max_n=10))
@settings(max_examples=300, deadline=None)
def test_report_invariants(graph):
    reports = [enumerate_mis(graph, a) for a in ALGOS]
    base = reports[0]
    for r in reports:
        assert r.sets == base.sets
        assert r.count <= bound_g(graph.n)
        assert r.stats.candidates_generated >= r.count
        assert list(r.sets) == sorted(set(r.sets))
        for s in r.sets:
            assert is_maximal_independent(graph, s)
    assert count_mis(graph, "pivot") == count_mis(graph, "branching") == base.count


@pytest.mark.parametrize("n", [11, 13, 15])
def test_random_agreement_with_networkx(n):
    for graph in random_graphs(n, 40, seed=n):
        expected = tuple(reference_mis(graph))
        assert enumerate_pivot(graph).sets == expected
        assert enumerate_branching(graph).sets == expected


@given(graphs(min_n=1, max_n=9))
@settings(max_examples=200, deadline=None)
def test_branching_structure(graph):
    r = enumerate_branching(graph)
    v, d = min_degree_vertex(graph)
    nv = closed_neighborhood(graph, v)
    assert r.stats.root_vertex == v
    assert r.stats.root_branches == d + 1
    assert all(s & nv for s in r.sets)
    duplicates = sum((s & nv).bit_count() - 1 for s in r.sets)
    assert r.stats.candidates_generated - r.count == duplicates


def test_multiplicativity_small_exhaustive():
    parts = [graph for n in range(1, 4) for graph in all_graphs(n)]
    for a in parts:
        for b in parts:
            assert count_mis(disjoint_union(a, b)) == count_mis(a) * count_mis(b)


@pytest.mark.parametrize("n", range(2, 22))
def test_moon_moser_attains_bound(n):
    assert count_mis(moon_moser(n), "branching") == bound_g(n)


def test_moon_moser_candidate_envelope():
    # reported, loose ceiling only
    for n in range(2, 16):
        r = enumerate_branching(moon_moser(n))
        assert r.stats.candidates_generated <= bound_g(n) * 4


def test_bound_violation_is_raised(monkeypatch):
    import misbound.enumeration as enumeration

    monkeypatch.setattr(enumeration, "bound_g", lambda n: 2)
    with pytest.raises(BoundViolation, match="Theorem 1"):
        enumeration.enumerate_pivot(K3)
    with pytest.raises(BoundViolation):
        enumeration.count_mis(K3, "branching")


def test_oracle_chunks_large_subset_space():
    rnd = random.Random(5)
    n = 20
    graph = graph_from_code(n, rnd.getrandbits(len(upper_pairs(n))))
    assert enumerate_oracle(graph).sets == enumerate_pivot(graph).sets
