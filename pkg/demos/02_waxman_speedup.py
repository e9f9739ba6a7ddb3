"""Standard vs IDAQ on Waxman graphs, a small version of the full sweep.

    python demos/02_waxman_speedup.py            # 2 instances, 3 reps
    mowsp bench -o bench.csv                     # the full 8 x 5 sweep

IDAQ pays for its bookkeeping at small K, and wins more the more vectors
share the search.  Correlated coefficients (all in [0.5, 1.1)) agree more
often on the best path, so that regime gains the most.
"""
import sys

from mowsp import BenchConfig, run_bench

instances = int(sys.argv[1]) if len(sys.argv) > 1 else 2
cfg = BenchConfig(instances=instances, repetitions=3, K_values=(5, 25, 50))


def progress(inst, regime, K):
    print(f"  instance {inst} {regime:<12} K={K}", flush=True)


rep = run_bench(cfg, progress=progress)
print()
print(rep.summary_text())
rep.write_csv("waxman_bench.csv")
print("\nrows written to waxman_bench.csv")
