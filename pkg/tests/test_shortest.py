import pytest
from hypothesis import given, settings

from pdksp import PathStream, WeightVector, make_path, path_length, shortest_tree
from pdksp.generators import gen_example1a, gen_example1b
from pdksp.oracle import OracleBudget, enum_paths_ordered

from .conftest import ids, small_graphs


def test_tree_on_tri(tri):
    labels = shortest_tree(tri, 0)
    assert labels.dist == (WeightVector((0,)), WeightVector((1,)), WeightVector((2,)))
    assert labels.tree_path(2) in ([0, 1, 2], [0, 2])


def test_tree_unreachable(single):
    labels = shortest_tree(single, 1)
    assert not labels.reachable(0)
    assert labels.dist[1] == (0,)


def test_tree_reversed(tri):
    labels = shortest_tree(tri, 2, reversed=True)
    assert [d[0] for d in labels.dist] == [2, 1, 0]


def test_tree_example1b_matches_oracle():
    g = gen_example1b(3)
    oracle_best = enum_paths_ordered(g, 0, g.n - 1)[0].length
    assert oracle_best == (6,)  # three short branches of length 2
    assert shortest_tree(g, 0).dist[g.n - 1] == oracle_best


def test_stream_on_tri(tri):
    stream = PathStream(tri, 0, 2)
    first, second = stream.next_path(), stream.next_path()
    assert first.nodes == ids([1, 2, 3]) and first.length == (2,)
    assert second.nodes == ids([1, 3]) and second.length == (2,)
    assert stream.next_path() is None
    assert stream.next_path() is None


def test_stream_single_arc(single):
    stream = PathStream(single, 0, 1)
    assert stream.next_path().nodes == (0, 1)
    assert stream.next_path() is None


def test_stream_first_path_example1a():
    g = gen_example1a(2, 3)
    first = PathStream(g, 0, g.n - 1).next_path()
    assert first == enum_paths_ordered(g, 0, g.n - 1)[0]
    # cheapest pair (first middle node) in both towers
    assert first.nodes == (0, 1, 4, 5, 8)


def test_path_length(tri):
    assert path_length(tri, ids([1, 2, 3])) == (2,)
    assert path_length(tri, ids([1, 3])) == (2,)
    with pytest.raises(KeyError):
        path_length(tri, ids([3, 1]))
    with pytest.raises(ValueError):
        path_length(tri, [0, 1, 0])


def test_path_length_pstar_example1a():
    g = gen_example1a(3, 4)
    pstar = (0, 1, 5, 6, 10, 11, 15)
    every = enum_paths_ordered(g, 0, g.n - 1, OracleBudget(max_nodes=16))
    assert path_length(g, pstar) == min(p.length for p in every)
    assert path_length(g, pstar) == (6,)


def test_prefix_stability(tri):
    g = gen_example1b(4)
    a = PathStream(g, 0, g.n - 1).take(5)
    b = PathStream(g, 0, g.n - 1)
    b.take(12)
    assert b.emitted[:5] == a


def test_iteration_resumes_after_take():
    g = gen_example1b(3)
    stream = PathStream(g, 0, g.n - 1)
    head = stream.take(3)
    assert list(stream)[:3] == head
    assert len(stream.emitted) == 8


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_enumeration_matches_oracle(g):
    oracle = enum_paths_ordered(g, 0, g.n - 1)
    stream = list(PathStream(g, 0, g.n - 1))
    assert [p.nodes for p in stream] == [p.nodes for p in oracle]
    assert [p.length for p in stream] == [p.length for p in oracle]
    for a, b in zip(stream, stream[1:]):
        assert a.length <= b.length


@settings(max_examples=60, deadline=None)
@given(small_graphs(dims=2))
def test_enumeration_matches_oracle_two_criteria(g):
    oracle = enum_paths_ordered(g, 0, g.n - 1)
    assert [p.nodes for p in PathStream(g, 0, g.n - 1)] == [p.nodes for p in oracle]


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_lengths_recompute_exactly(g):
    for p in PathStream(g, 0, g.n - 1).take(20):
        assert make_path(g, p.nodes).length == p.length
