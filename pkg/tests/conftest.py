import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from bmp.graph import Graph


def atlas_graphs(max_n: int = 7, connected: bool = False) -> list[Graph]:
    """One representative per isomorphism class, from the networkx atlas."""
    out = []
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() > max_n:
            continue
        if connected and not nx.is_connected(G):
            continue
        out.append(Graph.from_edges(G.number_of_nodes(), list(G.edges())))
    return out


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 12, max_extra: float = 0.3):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        edges.add((j, i))
    p = draw(st.floats(0, max_extra))
    pairs = [e for e in itertools.combinations(range(n), 2) if e not in edges]
    if pairs:
        extra = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
        edges.update(e for e, x in zip(pairs, extra) if x < p)
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges(n, [(perm[a], perm[b]) for a, b in edges])


@pytest.fixture(scope="session")
def small_atlas():
    return atlas_graphs(6)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in range(1, 10):
        if criterion in results:
            ok, detail = results[criterion]
            terminalreporter.write_line(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}")
        else:
            terminalreporter.write_line(f"criterion {criterion}: FAIL  not run")
