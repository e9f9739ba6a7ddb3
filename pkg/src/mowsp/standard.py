"""Standard Algorithm: one independent Dijkstra pass per coefficient vector."""
import time
from concurrent.futures import ThreadPoolExecutor

from .core import Mog, check_instance
from .dijkstra import shortest_path_tree
from .solution import SolutionSet
from .stats import SolverStats


def solve_standard(g: Mog, s: int, lambdas, parallel: bool = False, workers=None):
    """Solve every coefficient vector with its own shortest-path tree.

    Returns ``(solutions, stats)`` where ``solutions[i]`` answers
    ``lambdas[i]``.  With ``parallel=True`` the passes run on a thread pool;
    counters are merged afterwards.  Keep it off when timing.
    """
    lambdas = check_instance(g, s, lambdas)
    t0 = time.perf_counter()
    if not parallel:
        stats = SolverStats()
        trees = [shortest_path_tree(g, s, lam, stats, validate=False) for lam in lambdas]
    else:
        def one(lam):
            st = SolverStats()
            return shortest_path_tree(g, s, lam, st, validate=False), st

        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(one, list(lambdas)))
        trees = [t for t, _ in parts]
        stats = SolverStats()
        for _, st in parts:
            stats.developed_paths += st.developed_paths
            stats.scanned_paths += st.scanned_paths
            stats.cost_evaluations += st.cost_evaluations
            stats.heap_ops += st.heap_ops
            stats.developed_per_iteration += st.developed_per_iteration
            stats.scanned_per_iteration += st.scanned_per_iteration
    solutions = [SolutionSet(i + 1, t.cost, tree=t) for i, t in enumerate(trees)]
    stats.wall_time = time.perf_counter() - t0
    return solutions, stats
