import itertools

import pytest
from hypothesis import strategies as st

from pdksp import WeightedGraph, parse_graph


def graph_1based(n, edges, directed=True):
    """Fixture helper: 1-based node ids as in graph files."""
    return WeightedGraph.from_edges(n, [(u - 1, v - 1, w) for u, v, w in edges], directed)


def ids(seq):
    return tuple(v - 1 for v in seq)


TRI_TEXT = "p dsp directed 3 3 1\na 1 2 1\na 2 3 1\na 1 3 2\n"

# fan: s=1, x1..x3 = 2..4, t=5, a=6
FAN_EDGES = [(1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 6, 1), (3, 6, 1), (4, 6, 1), (6, 5, 1)]


@pytest.fixture
def tri():
    return parse_graph(TRI_TEXT)


@pytest.fixture
def tri_reweighted():
    return graph_1based(3, [(1, 2, 1), (2, 3, 1), (1, 3, 3)])


@pytest.fixture
def single():
    return parse_graph("p dsp directed 2 1 1\na 1 2 5\n")


@pytest.fixture
def diamond():
    return graph_1based(4, [(1, 2, 1), (2, 4, 1), (1, 3, 1), (3, 4, 1)])


@pytest.fixture
def fan():
    return graph_1based(6, FAN_EDGES)


@pytest.fixture
def chain():
    return graph_1based(3, [(1, 2, 1), (2, 3, 1)])


@st.composite
def small_graphs(draw, min_nodes=2, max_nodes=7, max_weight=4, dims=1, spine=False):
    """Random simple graph; ``spine`` forces the chain 0-1-...-(n-1) so t is reachable."""
    n = draw(st.integers(min_nodes, max_nodes))
    directed = draw(st.booleans())
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 14)))
    if spine:
        chosen = [(i, i + 1) for i in range(n - 1)] + [
            p for p in chosen if p not in {(i, i + 1) for i in range(n - 1)}]
    weight = st.tuples(*[st.integers(1, max_weight)] * dims)
    edges = [(u, v, draw(weight)) for u, v in chosen]
    if not edges:
        return WeightedGraph(directed, n, (), dims)
    return WeightedGraph.from_edges(n, edges, directed)


# one verdict line per acceptance criterion, echoed after the test summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
