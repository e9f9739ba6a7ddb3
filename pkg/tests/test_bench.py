import csv

import numpy as np
import pytest

from mowsp import BenchConfig, InputError, VerificationError, WaxmanParams, run_bench
from mowsp import bench as bench_mod
from mowsp.bench import FIELDS

SMALL = WaxmanParams(intensity=400, beta=0.3)


def test_rows_and_csv(tmp_path):
    cfg = BenchConfig(instances=2, waxman=SMALL, K_values=(1, 4), repetitions=2)
    rep = run_bench(cfg)
    assert len(rep.rows) == 2 * 2 * 2 * 2 * 2  # instance, regime, K, rep, algorithm
    rep.write_csv(tmp_path / "b.csv")
    with open(tmp_path / "b.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert tuple(rows[0]) == FIELDS and len(rows) == len(rep.rows)
    summary = rep.summary()
    assert {(s["regime"], s["K"]) for s in summary} == {(r, k) for r in ("correlated", "uncorrelated") for k in (1, 4)}
    assert "median" in rep.summary_text()
    for r in rep.rows:
        if r["algorithm"] == "standard":
            assert r["developed"] == r["K"] * r["V"]  # Waxman graphs keep one strong component


def test_tiny_single_cell():
    cfg = BenchConfig(instances=1, waxman=SMALL, K_values=(1,), repetitions=1, regimes={"c": (0.5, 1.1)})
    rep = run_bench(cfg)
    assert len(rep.rows) == 2
    assert {r["algorithm"] for r in rep.rows} == {"standard", "idaq"}


def test_zero_repetitions():
    with pytest.raises(InputError):
        run_bench(BenchConfig(repetitions=0))


def test_divergence_is_fatal(monkeypatch):
    def broken(g, s, lam):
        sols, stats = bench_mod.solve_standard(g, s, lam)
        sols[0].cost = sols[0].cost.copy()
        sols[0].cost[0] += 1
        return sols, stats

    monkeypatch.setitem(bench_mod.SOLVERS, "idaq", broken)
    cfg = BenchConfig(instances=1, waxman=SMALL, K_values=(2,), repetitions=1)
    with pytest.raises(VerificationError):
        run_bench(cfg)
