import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from misbound.graph import Graph, graph_from_code, upper_pairs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def reference_mis(g: Graph) -> list[int]:
    """MIS family via networkx maximal cliques of the complement, as sorted bitsets."""
    if g.n == 0:
        return [0]
    comp = nx.complement(to_nx(g))
    return sorted(sum(1 << v for v in c) for c in nx.find_cliques(comp))


def naive_mis(g: Graph) -> list[int]:
    """Definition-level brute force over tuples, no bit tricks."""
    edges = set(g.edges())
    out = []
    for r in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), r):
            s = set(combo)
            if any((u, v) in edges for u, v in itertools.combinations(sorted(s), 2)):
                continue
            if all(any((min(v, u), max(v, u)) in edges for u in s) for v in range(g.n) if v not in s):
                out.append(sum(1 << v for v in s))
    return sorted(out)


def all_graphs(n: int):
    for code in range(1 << len(upper_pairs(n))):
        yield graph_from_code(n, code)


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << len(upper_pairs(n))) - 1))
    return graph_from_code(n, code)


# -- acceptance summary: one PASS/FAIL line per criterion -------------------

_acceptance: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (rep.when == "call" or rep.failed):
        label = (item.function.__doc__ or item.name).strip().splitlines()[0]
        if rep.failed or label not in _acceptance:
            _acceptance[label] = "FAIL" if rep.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(_acceptance.items(), key=lambda kv: int(kv[0].split()[0][2:].rstrip(":"))):
        terminalreporter.write_line(f"{status}  {label}")
