import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mowsp import (EdgeRecord, InputError, LambdaSet, LogicError, Mog, PathRecord, check_instance, dominates,
                   edge_cost, extend_path, path_cost, path_from_nodes, validate_mog, weakly_dominates)
from _instances import g1


def test_edge_cost_examples():
    assert edge_cost(EdgeRecord(0, 1, (2, 3)), (1, 1)) == 5
    assert edge_cost(EdgeRecord(0, 1, (0, 0)), (7, 9)) == 0
    assert edge_cost(EdgeRecord(0, 1, (1, 4)), (3, 1)) == 7


def test_edge_cost_dimension_mismatch():
    with pytest.raises(InputError):
        edge_cost(EdgeRecord(0, 1, (1, 2)), (1, 1, 1))


def test_path_cost_examples():
    assert path_cost(PathRecord.seed(0, 2), (4, 9)) == 0
    assert path_cost(PathRecord(None, 0, None, (2, 5), 0, 0), (1, 1)) == 7
    assert path_cost(path_from_nodes(g1(), [0, 1, 2]), (3, 1)) == 11


def test_dominance_examples():
    assert dominates((1, 4), (2, 5))
    assert not dominates((1, 4), (4, 1))
    assert not dominates((3, 3), (3, 3))
    assert weakly_dominates((3, 3), (3, 3))
    assert weakly_dominates((1, 4), (2, 5))
    assert not weakly_dominates((1, 4), (4, 1))


vec = st.lists(st.integers(0, 5), min_size=3, max_size=3)


@given(vec, vec)
def test_dominance_relations(x, y):
    # strict implies weak, never both ways, weak both ways means equal
    if dominates(x, y):
        assert weakly_dominates(x, y) and not dominates(y, x)
    if weakly_dominates(x, y) and weakly_dominates(y, x):
        assert x == y
    assert dominates(x, y) == (weakly_dominates(x, y) and x != y)


def test_extend_path_examples():
    g = g1()
    p = extend_path(PathRecord.seed(0, 2), g.edge(0), 1)
    assert p.nodes() == [0, 1] and p.acc == (1.0, 4.0)
    q = extend_path(p, g.edge(2), 2)
    assert q.nodes() == [0, 1, 2] and q.acc == (2.0, 5.0)
    assert q.parent is p and q.length == 2
    with pytest.raises(LogicError):
        extend_path(PathRecord.seed(0, 2), g.edge(2), 1)


def test_validate_mog():
    assert not validate_mog(g1())
    bad = Mog(2, [0], [1], [[-1.0, 2.0]])
    rep = validate_mog(bad)
    assert rep.errors and not rep.ok
    zero = Mog(2, [0], [1], [[0.0, 0.0]])
    rep = validate_mog(zero)
    assert rep.ok and rep.warnings


def test_mog_immutable_and_equality():
    g = g1()
    with pytest.raises(AttributeError):
        g.node_count = 4
    with pytest.raises(ValueError):
        g.objectives[0, 0] = 9
    assert g == g1()
    assert g != g.with_objectives(g.objectives + 1)


def test_from_edges_and_adjacency():
    g = Mog.from_edges(3, [(0, 1, (1, 4)), (0, 2, (4, 1)), (1, 2, (1, 1)), (2, 1, (1, 1))])
    assert g == g1()
    assert g.adjacency()[0] == [(1, 0), (2, 1)]
    assert g.out_degree().tolist() == [2, 1, 1]
    assert g.in_degree().tolist() == [0, 2, 2]


def test_lambda_set_rejects_nonpositive():
    with pytest.raises(InputError):
        LambdaSet([[1, 0]])
    with pytest.raises(InputError):
        LambdaSet([[1, 2], [1, 2, 3]])


def test_check_instance():
    g = g1()
    assert check_instance(g, 0, [[1, 1]]).K == 1
    with pytest.raises(InputError):
        check_instance(g, 3, [[1, 1]])
    with pytest.raises(InputError):
        check_instance(g, 0, [[1, 1, 1]])
    with pytest.raises(InputError):
        check_instance(Mog(2, [0], [1], [[-1.0]]), 0)


def test_path_from_nodes_picks_cheapest_parallel_edge():
    g = Mog(2, [0, 0], [1, 1], [[5, 1], [1, 5]])
    assert path_from_nodes(g, [0, 1], lam=np.array([1.0, 3.0])).edge_ids() == [0]
    assert path_from_nodes(g, [0, 1], lam=np.array([3.0, 1.0])).edge_ids() == [1]
    with pytest.raises(InputError):
        path_from_nodes(g, [1, 0])
