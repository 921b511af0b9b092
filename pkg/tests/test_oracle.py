import pytest

from pdksp import SensitiveSet
from pdksp.generators import gen_example1b
from pdksp.oracle import (
    BudgetExceeded,
    OracleBudget,
    brute_force_best_set,
    enum_paths_ordered,
    enum_shortest_paths,
    min_cut_value,
)

from .conftest import ids


def test_enum_tri(tri):
    assert [p.nodes for p in enum_paths_ordered(tri, 0, 2)] == [ids([1, 2, 3]), ids([1, 3])]


def test_enum_single(single):
    assert [p.nodes for p in enum_paths_ordered(single, 0, 1)] == [(0, 1)]


def test_enum_diamond(diamond):
    assert [p.nodes for p in enum_paths_ordered(diamond, 0, 3)] == [ids([1, 2, 4]), ids([1, 3, 4])]


def test_shortest_tri(tri, tri_reweighted):
    assert len(enum_shortest_paths(tri, 0, 2)) == 2
    assert [p.nodes for p in enum_shortest_paths(tri_reweighted, 0, 2)] == [ids([1, 2, 3])]


def test_shortest_example1b():
    g = gen_example1b(2)
    assert len(enum_shortest_paths(g, 0, g.n - 1)) == 1


def test_best_set_diamond(diamond):
    assert brute_force_best_set(diamond, 0, 3, "n1").objective == 2


def test_best_set_fan(fan):
    S = SensitiveSet.edges([ids([6, 5])])
    assert brute_force_best_set(fan, 0, 4, "n2", S).objective == 1
    res = brute_force_best_set(fan, 0, 4, "n4", S, r=3)
    assert res.objective == (1, 1)  # one edge at level 3, one at level 2
    assert len(res.witness) == 3


def test_n2_with_all_arcs_equals_n1(diamond, fan):
    for g, t in ((diamond, 3), (fan, 4)):
        S = SensitiveSet.edges((a.tail, a.head) for a in g.arcs)
        assert (brute_force_best_set(g, 0, t, "n2", S).objective
                == brute_force_best_set(g, 0, t, "n1").objective)


def test_budget_exceeded():
    g = gen_example1b(6)
    with pytest.raises(BudgetExceeded):
        enum_paths_ordered(g, 0, g.n - 1, OracleBudget(max_paths=10))
    with pytest.raises(BudgetExceeded):
        enum_paths_ordered(g, 0, g.n - 1, OracleBudget(max_nodes=5))


def test_budget_rejects_nonpositive():
    with pytest.raises(ValueError):
        OracleBudget(max_paths=0)


def test_min_cut_fan():
    arcs = [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 5, 1), (2, 5, 1), (3, 5, 1), (5, 4, 1)]
    assert min_cut_value(6, arcs, 0, 4) == 1
