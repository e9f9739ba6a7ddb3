"""Benchmark harness: Standard vs IDAQ on Waxman instances.

Every (instance, regime, K) cell solves the same graph and coefficient
vectors with each algorithm, checks that the cost tables agree, then times
``repetitions`` runs of each algorithm, one solver at a time and in
alternating order.  Results are written as CSV, one row per run.
"""
from __future__ import annotations

import csv
import gc
import statistics
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .benchgen import CORRELATED, UNCORRELATED, CoeffRegime, TABLE1_TUNED, WaxmanParams, gen_lambdas, waxman_instance
from .errors import InputError, VerificationError
from .idaq import solve_idaq
from .solution import cost_table
from .standard import solve_standard

FIELDS = ("instance", "V", "E", "W", "K", "regime", "algorithm", "rep",
          "wall_ms", "developed", "scanned", "cost_evals")

SOLVERS = {"standard": solve_standard, "idaq": solve_idaq}
K_SWEEP = (5, 15, 25, 35, 50)
REGIMES = {"correlated": CORRELATED, "uncorrelated": UNCORRELATED}


@dataclass
class BenchConfig:
    instances: int = 8
    waxman: WaxmanParams = TABLE1_TUNED
    W: int = 5
    K_values: tuple = K_SWEEP
    regimes: dict = field(default_factory=lambda: dict(REGIMES))
    repetitions: int = 5
    algorithms: tuple = ("standard", "idaq")
    seed: int = 0
    source: int = 0

    def validate(self):
        if self.repetitions < 1:
            raise InputError("repetitions must be >= 1")
        if self.instances < 1:
            raise InputError("need at least one instance")
        if not self.K_values or min(self.K_values) < 1:
            raise InputError("K values must be >= 1")
        unknown = set(self.algorithms) - set(SOLVERS)
        if unknown:
            raise InputError(f"unknown algorithms {sorted(unknown)}")
        if not self.algorithms:
            raise InputError("no algorithms to run")


@dataclass
class BenchReport:
    rows: list = field(default_factory=list)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=FIELDS)
            w.writeheader()
            w.writerows(self.rows)

    def _cells(self):
        """``{(regime, K, instance, rep): {algorithm: row}}``"""
        cells = {}
        for r in self.rows:
            cells.setdefault((r["regime"], r["K"], r["instance"], r["rep"]), {})[r["algorithm"]] = r
        return cells

    def speedups(self, base="standard", other="idaq", key="wall_ms") -> dict:
        """``{(regime, K): [base/other ratio per instance]}``.

        Each instance contributes the ratio of its median timings over the
        repetitions, so one noisy run does not dominate.
        """
        per = {}
        for (regime, K, inst, _), algos in self._cells().items():
            if base in algos and other in algos:
                d = per.setdefault((regime, K, inst), ([], []))
                d[0].append(algos[base][key])
                d[1].append(algos[other][key])
        out = {}
        for (regime, K, _), (a, b) in sorted(per.items()):
            out.setdefault((regime, K), []).append(statistics.median(a) / max(statistics.median(b), 1e-12))
        return out

    def summary(self) -> list:
        """Per (regime, K): mean and median time and developed-path ratios."""
        dev = self.speedups(key="developed")
        lines = []
        for (regime, K), r in self.speedups().items():
            d = dev.get((regime, K), [np.nan])
            lines.append({
                "regime": regime, "K": K,
                "mean_speedup": float(np.mean(r)), "median_speedup": float(np.median(r)),
                "developed_ratio": float(np.mean([1 / x for x in d])),
            })
        return lines

    def summary_text(self) -> str:
        out = [f"{'regime':<13}{'K':>4}{'mean':>9}{'median':>9}{'dev idaq/std':>14}"]
        for s in self.summary():
            out.append(f"{s['regime']:<13}{s['K']:>4}{s['mean_speedup']:>9.3f}"
                       f"{s['median_speedup']:>9.3f}{s['developed_ratio']:>14.4f}")
        return "\n".join(out)


def _timed(fn, *args):
    gc.collect()
    was = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        sols, stats = fn(*args)
        return sols, stats, (time.perf_counter() - t0) * 1e3
    finally:
        if was:
            gc.enable()


def bench_instances(cfg: BenchConfig) -> list:
    return [waxman_instance(cfg.waxman.with_seed(cfg.seed + 1000 * i), W=cfg.W) for i in range(cfg.instances)]


def run_bench(cfg: BenchConfig, graphs: Optional[list] = None, progress=None) -> BenchReport:
    """Run the sweep; raises :class:`VerificationError` if the algorithms disagree."""
    cfg.validate()
    if graphs is None:
        graphs = bench_instances(cfg)
    report = BenchReport()
    for inst, g in enumerate(graphs):
        for r_i, (regime, (low, high)) in enumerate(cfg.regimes.items()):
            for K in cfg.K_values:
                lam = gen_lambdas(CoeffRegime(low, high, K, seed=[cfg.seed, inst, r_i, K]), g.W)
                ref = None
                for algo in cfg.algorithms:  # untimed warm-up doubles as the equality check
                    sols, _ = SOLVERS[algo](g, cfg.source, lam)
                    table = cost_table(sols)
                    if ref is None:
                        ref = table
                    elif not np.array_equal(np.isfinite(ref), np.isfinite(table)) or \
                            not np.allclose(ref, table, rtol=1e-9, atol=0):
                        raise VerificationError(
                            f"cost divergence between {cfg.algorithms[0]} and {algo} on instance "
                            f"{inst}, regime {regime}, K={K}")
                for rep in range(cfg.repetitions):
                    order = cfg.algorithms if rep % 2 == 0 else tuple(reversed(cfg.algorithms))
                    for algo in order:
                        _, st, ms = _timed(SOLVERS[algo], g, cfg.source, lam)
                        report.rows.append({
                            "instance": inst, "V": g.node_count, "E": g.edge_count, "W": g.W,
                            "K": K, "regime": regime, "algorithm": algo, "rep": rep,
                            "wall_ms": ms, "developed": st.developed_paths,
                            "scanned": st.scanned_paths, "cost_evals": st.cost_evaluations,
                        })
                if progress:
                    progress(inst, regime, K)
    return report
