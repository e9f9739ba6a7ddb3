"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
``MOWSP_SEED`` (if set) replaces the default seed of every generator.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import warnings

from . import io as mio
from .bench import REGIMES, BenchConfig, run_bench
from .benchgen import (TABLE1_LITERAL, TABLE1_TUNED, CoeffRegime, assign_random_objectives,
                       gen_lambdas, gen_waxman, synth_geo_objectives)
from .core import check_instance
from .errors import MowspError, VerificationError
from .idaq import solve_idaq
from .oracle import oracle_optimal_costs, pareto_fronts, structure_diagnostics
from .solution import SolutionSet
from .standard import solve_standard

log = logging.getLogger("mowsp")


def _default_seed():
    env = os.environ.get("MOWSP_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise SystemExit(f"MOWSP_SEED must be an integer, got {env!r}")


def _ints(text):
    return tuple(int(t) for t in text.split(",") if t.strip())


def _solve_oracle(g, s, lam):
    front = pareto_fronts(g, s)
    costs = oracle_optimal_costs(g, s, lam, front=front)
    sols = []
    for i in range(lam.K):
        sol = SolutionSet(i + 1, costs[i])
        sols.append(_OracleSolution(sol, front, lam[i]))
    return sols, None


class _OracleSolution:
    """Solution view over a Pareto front: the witness of the cheapest vector."""

    def __init__(self, sol, front, lam):
        self.lambda_index, self.cost = sol.lambda_index, sol.cost
        self._front, self._lam = front, lam
        self.reachable_nodes = sol.reachable_nodes

    def _k(self, v):
        return int((self._front.vectors[v] @ self._lam).argmin())

    def path(self, v):
        return self._front.witness(v, self._k(v))

    def edge_path(self, v):
        return self._front.witness_edges(v, self._k(v))


def cmd_gen_waxman(a):
    base = TABLE1_LITERAL if a.preset == "literal" else TABLE1_TUNED
    kw = {k: getattr(a, k) for k in ("intensity", "alpha", "beta") if getattr(a, k) is not None}
    p = type(base)(**{**base.__dict__, **kw, "seed": a.seed})
    g = assign_random_objectives(gen_waxman(p), a.W, [a.seed, 1])
    mio.write_graph(g, a.output)
    log.info("wrote %d nodes, %d edges (density %.3f)", g.node_count, g.edge_count,
             g.edge_count / (g.node_count * (g.node_count - 1)))
    return 0


def cmd_gen_lambdas(a):
    low, high = (a.low, a.high) if a.low is not None else REGIMES[a.regime]
    lam = gen_lambdas(CoeffRegime(low, high, a.K, a.seed), a.W)
    mio.write_lambdas(lam, a.output)
    return 0


def cmd_synth_geo(a):
    mio.write_graph(synth_geo_objectives(mio.read_graph(a.graph)), a.output)
    return 0


def cmd_solve(a):
    g = mio.read_graph(a.graph)
    lam = check_instance(g, a.source, mio.read_lambdas(a.lambdas))
    if a.algo == "standard":
        sols, stats = solve_standard(g, a.source, lam)
    elif a.algo == "idaq":
        sols, stats = solve_idaq(g, a.source, lam)
    else:
        sols, stats = _solve_oracle(g, a.source, lam)
    doc = mio.solution_document(g, a.source, lam, sols, a.algo, stats, include_paths=not a.no_paths)
    mio.write_solution(doc, a.output)
    return 0


def cmd_verify(a):
    g = mio.read_graph(a.graph) if a.graph else None
    rep = mio.verify_solutions(mio.read_solution(a.a), mio.read_solution(a.b), a.tol, graph=g)
    print(rep)
    for f in rep.failures[1:a.show]:
        print("  " + f)
    return 0 if rep.passed else 1


def cmd_bench(a):
    cfg = BenchConfig(instances=a.instances, W=a.W, K_values=a.K, repetitions=a.reps,
                      regimes={r: REGIMES[r] for r in a.regimes}, seed=a.seed)

    def progress(inst, regime, K):
        log.info("instance %d  %s  K=%d done", inst, regime, K)

    rep = run_bench(cfg, progress=progress)
    rep.write_csv(a.output)
    print(rep.summary_text())
    return 0


def cmd_export_geojson(a):
    g = mio.read_graph(a.graph)
    doc = mio.export_geojson(g, mio.read_solution(a.solution), a.targets)
    text = json.dumps(doc, indent=1)
    if a.output:
        with open(a.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_diagnostics(a):
    g = mio.read_graph(a.graph)
    diag = structure_diagnostics(g, a.source, pareto_fronts(g, a.source), with_n_l=a.n_l)
    print(json.dumps(diag.as_dict(), indent=1))
    return 0


def build_parser() -> argparse.ArgumentParser:
    seed = _default_seed()
    ap = argparse.ArgumentParser(prog="mowsp", description="Multi-objective weighted shortest paths.")
    ap.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-waxman", parents=[common], help="random Waxman graph with W uniform objectives")
    p.add_argument("--preset", choices=("tuned", "literal"), default="tuned")
    p.add_argument("--intensity", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("-W", type=int, default=5)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_gen_waxman)

    p = sub.add_parser("gen-lambdas", parents=[common], help="K random coefficient vectors")
    p.add_argument("-K", type=int, required=True)
    p.add_argument("-W", type=int, required=True)
    p.add_argument("--regime", choices=sorted(REGIMES), default="correlated")
    p.add_argument("--low", type=float)
    p.add_argument("--high", type=float)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_gen_lambdas)

    p = sub.add_parser("synth-geo", parents=[common], help="replace objectives by tag-based C1..C4")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_synth_geo)

    p = sub.add_parser("solve", parents=[common], help="solve an instance")
    p.add_argument("--algo", choices=("standard", "idaq", "oracle"), default="idaq")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-l", "--lambdas", required=True)
    p.add_argument("-s", "--source", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--no-paths", action="store_true", help="store costs only")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="compare two solution files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-g", "--graph", help="re-cost paths against this graph")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--show", type=int, default=10, help="failures to list")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="Standard vs IDAQ timing sweep")
    p.add_argument("--instances", type=int, default=8)
    p.add_argument("-W", type=int, default=5)
    p.add_argument("-K", type=_ints, default=(5, 15, 25, 35, 50), help="comma list")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--regimes", nargs="+", choices=sorted(REGIMES), default=sorted(REGIMES))
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("-o", "--output", required=True, help="CSV path")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("export-geojson", parents=[common], help="routes as GeoJSON LineStrings")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-S", "--solution", required=True)
    p.add_argument("-t", "--targets", type=_ints, required=True, help="comma list of nodes")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_export_geojson)

    p = sub.add_parser("diagnostics", parents=[common], help="Pareto structure statistics")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-s", "--source", type=int, default=0)
    p.add_argument("--n-l", action="store_true", help="also compute N_L (slow)")
    p.set_defaults(fn=cmd_diagnostics)
    return ap


def cli_main(argv=None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    warnings.simplefilter("default")
    try:
        return a.fn(a)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (MowspError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_main())
