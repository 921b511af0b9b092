from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pdksp import (
    Arc,
    GraphFormatError,
    GraphValidationError,
    WeightedGraph,
    WeightVector,
    compare_lengths,
    parse_graph,
    serialize_graph,
    validate_graph,
)
from pdksp.generators import gen_example1b
from pdksp.io import parse_sensitive, serialize_sensitive

from .conftest import graph_1based, small_graphs


def test_parse_single_arc(single):
    assert single.directed and single.n == 2 and single.m == 1
    assert single.arcs[0] == Arc(0, 1, WeightVector((5,)))


def test_parse_tri(tri):
    assert (tri.n, tri.m, tri.d) == (3, 3, 1)
    assert [(a.tail, a.head) for a in tri.arcs] == [(0, 1), (1, 2), (0, 2)]


def test_parse_rejects_parallel_edge():
    with pytest.raises(GraphValidationError, match="parallel"):
        parse_graph("p dsp directed 2 2 1\na 1 2 1\na 1 2 3\n")


def test_parse_fractions_and_comments():
    g = parse_graph("c hello\np dsp undirected 3 2 2\na 1 2 3/2 5\nc mid\na 2 3 1 1/3\n")
    assert g.arcs[0].weight == (Fraction(3, 2), 5)
    assert g.arcs[1].weight == (1, Fraction(1, 3))


@pytest.mark.parametrize("text, line", [
    ("p dsp directed 2 1 1\na 1 2 x\n", 2),
    ("p dsp directed 2 1 1\na 1 2 1/0\n", 2),
    ("p dsp sideways 2 1 1\n", 1),
    ("a 1 2 1\n", 1),
    ("p dsp directed 2 1 1\na 1 2\n", 2),
    ("p dsp directed 2 2 1\na 1 2 1\n", 1),
    ("p dsp directed 2 1 1\nq\n", 2),
])
def test_parse_syntax_errors_report_line(text, line):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(text)
    assert err.value.line == line


@pytest.mark.parametrize("text, kind, line", [
    ("p dsp directed 3 1 1\na 3 3 1\n", "self-loop", 2),
    ("p dsp directed 3 1 1\na 1 2 0\n", "non-positive-weight", 2),
    ("p dsp directed 3 1 1\na 1 2 -1/2\n", "non-positive-weight", 2),
    ("p dsp directed 3 1 1\na 1 4 1\n", "node-out-of-range", 2),
    ("p dsp undirected 3 2 1\na 1 2 1\na 2 1 1\n", "parallel-edge", 3),
])
def test_validation_errors(text, kind, line):
    with pytest.raises(GraphValidationError) as err:
        parse_graph(text)
    assert [v.kind for v in err.value.violations] == [kind]
    assert f"line {line}:" in str(err.value)


def test_validate_graph_lists_violations(tri):
    assert validate_graph(tri) == []
    loop = graph_1based(3, [(1, 2, 1), (3, 3, 1)])
    assert [v.kind for v in validate_graph(loop)] == ["self-loop"]
    zero = graph_1based(3, [(1, 2, 0)])
    assert [v.kind for v in validate_graph(zero)] == ["non-positive-weight"]


def test_antiparallel_arcs_allowed_when_directed():
    g = graph_1based(2, [(1, 2, 1), (2, 1, 1)])
    assert validate_graph(g) == []


def test_serialize_single_arc(single):
    assert serialize_graph(single) == "p dsp directed 2 1 1\na 1 2 5\n"


def test_serialize_round_trip_tri(tri):
    assert parse_graph(serialize_graph(tri)) == tri.canonical()


def test_serialize_round_trip_example1b():
    g = gen_example1b(3)
    back = parse_graph(serialize_graph(g, ["provenance family=example1b n_prime=3"]))
    assert back == g.canonical()


@given(small_graphs(dims=2))
def test_round_trip_property(g):
    assert parse_graph(serialize_graph(g)).canonical() == g.canonical()


def test_compare_lengths_examples():
    assert compare_lengths(WeightVector((1,)), WeightVector((2,))) == -1
    assert compare_lengths(WeightVector((1, 1000000)), WeightVector((2, 0))) == -1
    a = WeightVector((Fraction(3, 2), 5))
    assert compare_lengths(a, WeightVector((Fraction(3, 2), 5))) == 0


def test_compare_lengths_dimension_mismatch():
    with pytest.raises(ValueError):
        compare_lengths(WeightVector((1,)), WeightVector((1, 2)))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
vectors = st.lists(rationals, min_size=3, max_size=3).map(WeightVector)


@given(vectors, vectors, vectors)
def test_compare_is_total_order(a, b, c):
    ab, ba = compare_lengths(a, b), compare_lengths(b, a)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if ab <= 0 and compare_lengths(b, c) <= 0:
        assert compare_lengths(a, c) <= 0


@given(vectors, vectors)
def test_weight_arithmetic_exact(a, b):
    assert (a + b) - b == a
    assert sum([a, b]) == a + b


def test_sensitive_round_trip():
    S = parse_sensitive("c comment\ne 1 2\ne 3 4\n")
    assert S.kind == "edges" and S.members == {(0, 1), (2, 3)}
    assert parse_sensitive(serialize_sensitive(S)) == S
    N = parse_sensitive("n 2\nn 5\n")
    assert N.kind == "nodes" and N.members == {1, 4}


def test_sensitive_rejects_mixed():
    with pytest.raises(GraphFormatError):
        parse_sensitive("e 1 2\nn 3\n")


def test_undirected_adjacency_expands_both_ways():
    g = WeightedGraph(False, 3, (Arc(0, 1, WeightVector((2,))),), 1)
    assert g.has_arc(1, 0) and g.weight(1, 0) == (2,)
    assert [v for v, _ in g.out_neighbors(1)] == [0]
