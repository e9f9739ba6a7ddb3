"""Pareto front sizes next to the paths IDAQ actually develops.

On a small Waxman graph we compute the full Pareto front at each node and
print how the front sizes spread out.  L is the smallest front size that
covers all but a log-fraction of the nodes.  The front bounds how many
distinct paths per node could ever matter; IDAQ only develops the ones
some coefficient vector needs, which is usually far fewer.
"""
import numpy as np

from mowsp import (CORRELATED, CoeffRegime, WaxmanParams, gen_lambdas, pareto_fronts, solve_idaq,
                   structure_diagnostics, waxman_instance)

g = waxman_instance(WaxmanParams(intensity=600, beta=0.25, seed=4), W=3)
front = pareto_fronts(g, 0)
d = structure_diagnostics(g, 0, front)
counts = d.pareto_count

print(f"|V|={g.node_count} |E|={g.edge_count} D={d.D:.1f} D_L={d.D_L:.1f}")
print(f"front sizes: min {counts.min()}, median {int(np.median(counts))}, max {counts.max()}")
print(f"L = {d.L}  (alpha(L) = {d.alpha[d.L]:.3f}, gamma(L) = {d.gamma[d.L]:.3f})")
for l in (1, 2, 5, 10, 20):
    if l in d.alpha:
        print(f"  share of nodes with <= {l:>2} Pareto paths: {d.alpha[l]:.2f}")

for K in (5, 20, 50):
    lam = gen_lambdas(CoeffRegime(*CORRELATED, K, seed=K), g.W)
    _, stats = solve_idaq(g, 0, lam)
    print(f"K={K:>2}: IDAQ developed {stats.developed_paths:>5} paths, standard would develop {K * g.node_count}")
