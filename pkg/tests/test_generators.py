from fractions import Fraction
from math import comb

import pytest

from pdksp import MeasureKind, PathStream, WeightedGraph, best_pair, validate_graph
from pdksp.generators import (
    GeneratorSpec,
    build_example2,
    example2_prefix_count,
    gen_example1a,
    gen_example1b,
    gen_example2,
    gen_example2_boundary,
    gen_random,
    random_corpus,
)
from pdksp.oracle import OracleBudget, enum_paths_ordered

E_SYM = MeasureKind.EDGE_SYMDIFF
BIG = OracleBudget(max_nodes=20, max_paths=200000)


def chain_with_bypass():
    return WeightedGraph.from_edges(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 5)], True)


@pytest.mark.parametrize("qbar, width", [(1, 2), (2, 3), (3, 4)])
def test_example1a_size(qbar, width):
    g = gen_example1a(qbar, width)
    assert g.n == qbar * (width + 1) + 1
    assert g.m == 2 * qbar * width


def test_example1a_max_weight():
    g = gen_example1a(3, 4)
    assert max(a.weight[0] for a in g.arcs) == 3 * 4 ** 2


def test_example1a_lengths_count_in_base_width():
    g = gen_example1a(2, 3)
    lengths = [p.length[0] - 4 for p in enum_paths_ordered(g, 0, g.n - 1)]
    # pair j of tower i adds j * 3^(i-1) (plus 1 when j > 0)
    assert len(lengths) == 9 and lengths == sorted(lengths)


@pytest.mark.parametrize("n_prime", [1, 3, 6])
def test_example1b_size(n_prime):
    g = gen_example1b(n_prime)
    assert (g.n, g.m) == (3 * n_prime + 1, 4 * n_prime)


def test_example1b_prefix_distance():
    g = gen_example1b(6)
    paths = PathStream(g, 0, g.n - 1).take(1 + 6)
    assert best_pair(paths, E_SYM)[2] == 8


def test_boundary_is_complete_graph():
    g = gen_example2_boundary(3)
    assert (g.n, g.m) == (4, comb(4, 2))
    assert all(a.weight == (1,) for a in g.arcs)


def test_example2_clique():
    ex = build_example2(chain_with_bypass(), 0, 4, 2, 3)
    g = ex.graph
    assert g.n == 5 + 1 + 3
    assert ex.epsilon == (Fraction(1, 5),)
    every = enum_paths_ordered(g, 0, 4, BIG)
    assert every[0].length == ex.shortest_before.length + ex.epsilon
    below = [p for p in every if p.length < ex.second_before.length]
    assert len(below) == example2_prefix_count(3, 3) == 16
    first = PathStream(g, 0, 4).take(example2_prefix_count(3, 1))
    assert len(first) == 4 and best_pair(first, E_SYM)[2] == 4


@pytest.mark.parametrize("insert", ["example1a", "example1b"])
def test_example2_inserts_stay_below_second_path(insert):
    ex = build_example2(chain_with_bypass(), 0, 4, 2, 2, insert=insert)
    assert validate_graph(ex.graph) == []
    every = enum_paths_ordered(ex.graph, 0, 4, BIG)
    below = [p for p in every if p.length < ex.second_before.length]
    assert len(below) == 4


def test_example2_rejects_bad_inputs():
    base = chain_with_bypass()
    with pytest.raises(ValueError):
        gen_example2(base, 0, 4, 0, 2)  # terminal, not an inner node
    tie = WeightedGraph.from_edges(4, [(0, 1, 1), (1, 3, 1), (0, 2, 1), (2, 3, 1)], True)
    with pytest.raises(ValueError, match="not unique"):
        gen_example2(tie, 0, 3, 1, 2)
    with pytest.raises(ValueError):
        gen_example2(base, 0, 4, 2, 2, insert="spiral")


def test_prefix_count_formula():
    assert [example2_prefix_count(4, q) for q in range(5)] == [1, 5, 17, 41, 65]


def test_random_is_deterministic():
    a = gen_random(8, 0.4, (1, 10), 7)
    assert a == gen_random(8, 0.4, (1, 10), 7)
    assert a != gen_random(8, 0.4, (1, 10), 8)


def test_random_max_density_two_nodes():
    g = gen_random(2, "max", (1, 1), 3)
    assert g.m == 1 and g.arcs[0].weight == (1,)


def test_random_directed_reaches_all_from_source():
    for seed in range(20):
        g = gen_random(6, 0.3, (1, 3), seed, directed=True)
        assert all(enum_paths_ordered(g, 0, v) for v in range(1, 6))


def test_random_rejects_sparse_density():
    with pytest.raises(ValueError):
        gen_random(10, 0.05, (1, 3), 0)
    with pytest.raises(ValueError):
        gen_random(5, 0.5, (0, 3), 0)


def test_corpus_is_deterministic():
    a = [(c.name, c.graph) for c in random_corpus(30, 5)]
    b = [(c.name, c.graph) for c in random_corpus(30, 5)]
    assert a == b
    assert all(2 <= c.graph.n <= 10 and validate_graph(c.graph) == [] for c in random_corpus(30, 5))


def test_spec_build_and_provenance():
    spec = GeneratorSpec("example1b", {"n_prime": 2})
    assert spec.build() == gen_example1b(2)
    assert spec.provenance() == "provenance family=example1b n_prime=2"
    with pytest.raises(ValueError):
        GeneratorSpec("spiral").build()
