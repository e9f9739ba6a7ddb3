import numpy as np

from mowsp import Mog, cost_table, path_cost, path_from_nodes, shortest_path_tree, solve_standard
from _instances import G1_COSTS, G1_LAMBDAS, g1, random_int_instance


def test_g1():
    sols, stats = solve_standard(g1(), 0, G1_LAMBDAS)
    for i, sol in enumerate(sols):
        assert sol.lambda_index == i + 1
        assert sol.as_dict() == G1_COSTS[i]
    assert stats.developed_paths == 9


def test_k1_is_one_tree():
    g, lam = random_int_instance(np.random.default_rng(3), K_range=(1, 1))
    sols, _ = solve_standard(g, 0, lam)
    assert np.array_equal(sols[0].cost, shortest_path_tree(g, 0, lam[0]).cost)


def test_isolated_node_absent():
    g = Mog(3, [0], [1], [[1.0, 1.0]])
    sols, _ = solve_standard(g, 0, [[1, 1], [2, 1]])
    for sol in sols:
        assert 2 not in sol and sol.path(2) is None


def test_paths_recost_and_parallel_matches():
    g, lam = random_int_instance(np.random.default_rng(11), n_range=(20, 30))
    seq, _ = solve_standard(g, 0, lam)
    par, _ = solve_standard(g, 0, lam, parallel=True, workers=4)
    assert np.array_equal(cost_table(seq), cost_table(par))
    for i, sol in enumerate(seq):
        for v in sol.reachable_nodes():
            edges = sol.edge_path(v)
            acc = g.objectives[edges].sum(axis=0) if edges else np.zeros(g.W)
            assert acc @ lam[i] == sol.cost[v]
            assert path_cost(path_from_nodes(g, sol.path(v), lam[i]), lam[i]) == sol.cost[v]
