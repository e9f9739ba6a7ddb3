"""Three routes through a three-node graph.

Each edge carries two objectives (say, travel time and exposure).  Three
coefficient vectors weigh them differently, and each picks its own route.
"""
import numpy as np

from mowsp import Mog, oracle_optimal_costs, solve_idaq, solve_standard

g = Mog.from_edges(3, [
    (0, 1, (1, 4)),
    (0, 2, (4, 1)),
    (1, 2, (1, 1)),
    (2, 1, (1, 1)),
])
lambdas = [(1, 1), (3, 1), (1, 3)]

std, std_stats = solve_standard(g, 0, lambdas)
idaq, idaq_stats = solve_idaq(g, 0, lambdas)

for lam, a, b in zip(lambdas, std, idaq):
    print(f"lambda={lam}")
    for v in (1, 2):
        print(f"  to {v}: cost {b.cost[v]:g} via {b.path(v)}   (standard: {a.cost[v]:g})")

# the Pareto oracle agrees
print(oracle_optimal_costs(g, 0, lambdas))
print("developed paths: standard", std_stats.developed_paths, " idaq", idaq_stats.developed_paths)
assert np.array_equal(np.vstack([s.cost for s in std]), np.vstack([s.cost for s in idaq]))
