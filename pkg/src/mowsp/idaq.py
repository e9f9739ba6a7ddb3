"""IDAQ: iterative search that shares developed paths across coefficient vectors.

One run answers all ``K`` coefficient vectors.  Iteration ``i`` is a
Dijkstra-like sweep ordered by cost under ``lambdas[i]``, but the frontier
is an :class:`AdaptiveQueue` that survives between iterations: paths found
while solving earlier vectors stay queued, and a node whose best known path
was already developed is not developed again.  Scanned paths enter the
queue only when :func:`is_relevant` says they could still be optimal for
some vector.

Heap entry rule, maintained after every queue mutation: node ``v`` has an
entry iff its cheapest known path under the current vector is a queued path
that no developed path at ``v`` matches or beats; among equal queued paths
the earliest pushed one is the entry.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import Mog, PathRecord, as_lambda_set, check_instance
from .dijkstra import shortest_path_tree
from .errors import LogicError, StateError, VerificationError
from .heap import AddressableHeap
from .solution import SolutionSet
from .stats import SolverStats

INF = float("inf")


def _weakly_dominates(x, y):
    for a, b in zip(x, y):
        if a > b:
            return False
    return True


def _dominates(x, y):
    strict = False
    for a, b in zip(x, y):
        if a > b:
            return False
        if a < b:
            strict = True
    return strict


class AdaptiveQueue:
    """Per-node path registries plus a heap holding at most one path per node.

    ``lambda_index`` is the 1-based index of the coefficient vector that
    currently orders the heap.
    """

    def __init__(self, node_count: int, lambdas, debug: bool = False):
        self.lambdas = as_lambda_set(lambdas)
        self._lam = self.lambdas.matrix
        self.index = 0
        self.queue_paths = [[] for _ in range(node_count)]
        self.popped_paths = [[] for _ in range(node_count)]
        self.handles = [None] * node_count
        K = self.lambdas.K
        self.qsize = np.zeros(node_count, dtype=np.int64)  # |Q_v|
        # per-vector minimum cost of developed paths at each node (exact) and
        # a lower bound on the cost of queued paths (may go stale on removal)
        self.popped_min = np.full((node_count, K), INF)
        self.queued_min = np.full((node_count, K), INF)
        self.heap = AddressableHeap()
        self.next_push_seq = 0
        self.debug = debug
        self._retired_heap_ops = 0
        self._queued_nodes = set()

    @property
    def lambda_index(self) -> int:
        return self.index + 1

    def cost(self, p: PathRecord, i: Optional[int] = None) -> float:
        """Cost of ``p`` under vector ``i`` (0-based; default: current)."""
        i = self.index if i is None else i
        if p.costs is not None:
            return float(p.costs[i])
        return float(np.dot(p.acc, self._lam[i]))

    def costs(self, p: PathRecord) -> np.ndarray:
        if p.costs is not None:
            return p.costs
        return np.asarray(p.acc) @ self._lam.T

    def q(self, v: int) -> list:
        """Discovered paths at ``v``: developed ones first, then queued in push order."""
        return self.popped_paths[v] + self.queue_paths[v]

    def _insert(self, v, p, c):
        self.handles[v] = self.heap.insert(c, p)

    def refresh(self, v: int) -> None:
        """Recompute ``v``'s heap entry from its registries."""
        i = self.index
        best, bc = None, INF
        for b in self.queue_paths[v]:
            c = b.costs[i] if b.costs is not None else self.cost(b, i)
            if best is None or c < bc:
                best, bc = b, c
        if best is not None and not bc < self.popped_min[v, i]:
            best = None
        h = self.handles[v]
        if h is not None:
            if h.item is best:
                return
            self.heap.delete(h)
            self.handles[v] = None
        if best is not None:
            self._insert(v, best, bc)

    def push(self, p: PathRecord) -> None:
        v = p.end_node
        if p.push_seq < self.next_push_seq and self.next_push_seq > 0:
            raise LogicError("push_seq must increase in push order")
        self.next_push_seq = p.push_seq + 1
        self.queue_paths[v].append(p)
        self.qsize[v] += 1
        self._queued_nodes.add(v)
        pc = self.costs(p)
        np.minimum(self.queued_min[v], pc, out=self.queued_min[v])
        c = float(pc[self.index])
        h = self.handles[v]
        if h is not None:
            if c < h.key:
                self.heap.delete(h)
                self._insert(v, p, c)
        elif c < self.popped_min[v, self.index]:
            # no entry means every queued path is matched by a developed one
            self._insert(v, p, c)
        if self.debug:
            self.check_node(v)

    def pop(self) -> PathRecord:
        if self.heap._root is None:
            raise StateError("pop from an adaptive queue with an empty priority heap")
        c, p = self.heap.pop_min()
        v = p.end_node
        self.handles[v] = None
        qp = self.queue_paths[v]
        qp.remove(p)
        if not qp:
            self._queued_nodes.discard(v)
            self.queued_min[v] = INF
        self.popped_paths[v].append(p)
        np.minimum(self.popped_min[v], self.costs(p), out=self.popped_min[v])
        if self.debug:
            self.check_node(v)
        return p

    def is_empty(self) -> bool:
        return self.heap._root is None

    def adapt(self, i: int) -> None:
        """Switch to vector ``i`` (1-based) and rebuild the heap."""
        if not (1 <= i <= self.lambdas.K):
            raise LogicError(f"adapt index {i} outside 1..{self.lambdas.K}")
        self._retired_heap_ops += self.heap.ops
        self.heap.clear()
        self.heap = AddressableHeap()
        self.handles = [None] * len(self.handles)
        self.index = i - 1
        col = self.index
        # only nodes whose queued lower bound beats the developed minimum can
        # get an entry
        cand = np.flatnonzero(self.queued_min[:, col] < self.popped_min[:, col])
        for v in cand.tolist():
            if self.queue_paths[v]:
                self.refresh(v)
        if self.debug:
            self.check_all()

    def remove(self, v: int, doomed) -> int:
        """Drop the queued paths ``doomed`` at ``v``; returns how many went."""
        if not doomed:
            return 0
        qp = self.queue_paths[v]
        kept = [b for b in qp if b not in doomed]
        n = len(qp) - len(kept)
        self.queue_paths[v] = kept
        self.qsize[v] -= n
        if not kept:
            self._queued_nodes.discard(v)
            self.queued_min[v] = INF
        h = self.handles[v]
        if h is not None and h.item in doomed:
            self.refresh(v)
        if self.debug:
            self.check_node(v)
        return n

    @property
    def heap_ops(self) -> int:
        return self._retired_heap_ops + self.heap.ops

    # -- debug checks -------------------------------------------------------

    def expected_representative(self, v: int) -> Optional[PathRecord]:
        """Literal evaluation of the priority rule, quadratic in |Q_v|."""
        i = self.index
        for p in self.queue_paths[v]:
            cp = self.cost(p, i)
            null = False
            for b in self.queue_paths[v]:
                if b is p:
                    continue
                cb = self.cost(b, i)
                if cb < cp or (cb == cp and b.push_seq < p.push_seq):
                    null = True
                    break
            if not null:
                for b in self.popped_paths[v]:
                    if self.cost(b, i) <= cp:
                        null = True
                        break
            if not null:
                return p
        return None

    def check_node(self, v: int) -> None:
        want = self.expected_representative(v)
        h = self.handles[v]
        got = h.item if h is not None else None
        if got is not want:
            raise VerificationError(f"heap entry for node {v} is {got!r}, priority rule gives {want!r}")
        if h is not None and (not h.alive or h.key != self.cost(want)):
            raise VerificationError(f"heap entry for node {v} has a stale key")
        if self.qsize[v] != len(self.queue_paths[v]) + len(self.popped_paths[v]):
            raise VerificationError(f"registry size of node {v} out of sync")

    def check_all(self) -> None:
        for v in range(len(self.handles)):
            self.check_node(v)
        live = sum(h is not None for h in self.handles)
        if live != len(self.heap):
            raise VerificationError(f"heap holds {len(self.heap)} entries, {live} nodes claim one")


class IdaqState:
    """Everything a run accumulates besides the queue itself.

    ``best[v]`` lists, per coefficient vector, a cheapest path among the
    discovered paths at ``v``; ``best_cost[v]`` holds the matching costs
    (``inf`` rows for nodes whose table is not built).
    """

    def __init__(self, node_count: int, K: int, pareto_sample=None, debug=False):
        self.pareto_sample = pareto_sample if pareto_sample is not None else {}
        self.optimal_paths = []
        self.best = {}
        self.best_cost = np.full((node_count, K), INF)
        self.has_best = np.zeros(node_count, dtype=bool)
        self.iteration = 1
        self.stats = SolverStats()
        self.trace = [] if debug else None

    def drop_best(self, v):
        if self.has_best[v]:
            del self.best[v]
            self.has_best[v] = False
            self.best_cost[v] = INF


def _init_best(v, queue, state):
    paths = queue.q(v)
    costs = np.array([queue.costs(b) for b in paths])
    arg = np.argmin(costs, axis=0)  # first minimum: developed paths win ties
    state.best[v] = [paths[j] for j in arg.tolist()]
    state.best_cost[v] = costs[arg, np.arange(costs.shape[1])]
    state.has_best[v] = True


def is_relevant(p: PathRecord, state: IdaqState, queue: AdaptiveQueue, lambdas=None) -> bool:
    """Decide whether the scanned path ``p`` may still be optimal for some vector.

    While ``|Q_v| < K / W`` this is a Pareto test: ``p`` is rejected when a
    discovered path at ``v`` is component-wise no worse, and accepting it
    drops the queued paths it strictly dominates.  From ``|Q_v| >= K / W``
    on, ``p`` must strictly beat the cheapest known path for at least one
    vector; accepting it drops queued paths that are no longer cheapest for
    any vector.  Developed paths are never dropped.
    """
    lam = queue._lam if lambdas is None else as_lambda_set(lambdas).matrix
    K, W = lam.shape
    v = p.end_node
    stats = state.stats
    popped = queue.popped_paths[v]
    queued = queue.queue_paths[v]
    acc = p.acc
    if len(popped) + len(queued) < K / W:
        stats.dominance_checks += 1
        for b in popped:
            if _weakly_dominates(b.acc, acc):
                return False
        for b in queued:
            if _weakly_dominates(b.acc, acc):
                return False
        if queue.debug:
            _check_not_dominating(p, popped)
        doomed = [b for b in queued if _dominates(acc, b.acc)]
        if doomed:
            stats.removed_paths += queue.remove(v, doomed)
        state.drop_best(v)
        return True

    stats.optimality_checks += 1
    if not state.has_best[v]:
        _init_best(v, queue, state)
    pc = queue.costs(p)
    bc = state.best_cost[v]
    better = pc < bc
    if not better.any():
        return False
    if queue.debug:
        _check_not_dominating(p, popped)
    best = state.best[v]
    for j in np.flatnonzero(better).tolist():
        best[j] = p
    np.minimum(bc, pc, out=bc)
    doomed = [b for b in queued if b not in best]
    if doomed:
        stats.removed_paths += queue.remove(v, doomed)
    return True


def _check_not_dominating(p, popped):
    for b in popped:
        if _dominates(p.acc, b.acc):
            raise VerificationError(f"scanned path {p!r} dominates developed path {b!r}")


def build_sets(state: IdaqState, lambdas, g: Mog) -> list:
    """Pick, per vector and node, the cheapest developed path (earliest on ties)."""
    lam = as_lambda_set(lambdas).matrix
    K = lam.shape[0]
    by_node = {}
    for p in state.optimal_paths:
        by_node.setdefault(p.end_node, []).append(p)
    cost = np.full((K, g.node_count), INF)
    chosen = [dict() for _ in range(K)]
    cols = np.arange(K)
    for v, paths in by_node.items():
        c = np.array([p.costs if p.costs is not None else np.asarray(p.acc) @ lam.T
                      for p in paths])
        arg = np.argmin(c, axis=0)
        cost[:, v] = c[arg, cols]
        for i, j in enumerate(arg.tolist()):
            chosen[i][v] = paths[j]
    return [SolutionSet(i + 1, cost[i], records=chosen[i]) for i in range(K)]


class IdaqSolver:
    """One IDAQ run over ``(g, s, lambdas)``.

    With ``debug=True`` every queue mutation re-checks the heap entry rule,
    developing a node twice in one iteration or a path twice at all raises
    :class:`VerificationError`, and developed paths are logged in
    ``state.trace`` as ``(iteration, path)`` pairs.
    """

    def __init__(self, g: Mog, s: int, lambdas, debug: bool = False):
        self.lambdas = check_instance(g, s, lambdas)
        self.g = g
        self.s = int(s)
        self.debug = debug
        lam = self.lambdas.matrix
        self.K, self.W = lam.shape
        self.queue = AdaptiveQueue(g.node_count, self.lambdas, debug=debug)
        self.state = IdaqState(g.node_count, self.K, debug=debug)

    def run(self):
        t0 = time.perf_counter()
        g, K, W = self.g, self.K, self.W
        queue, state = self.queue, self.state
        stats = state.stats

        # costs of every edge under every vector, (|E|, K)
        edge_costs = g.objectives @ self.lambdas.matrix.T
        stats.cost_evaluations += g.edge_count * K

        tree = shortest_path_tree(g, self.s, self.lambdas[0], validate=False)
        stats.cost_evaluations += g.edge_count
        sample = tree.path_records(g)
        state.pareto_sample = sample
        sample_acc = np.full((g.node_count, W), INF)
        for v, sp in sample.items():
            sample_acc[v] = sp.acc

        objectives = g.objectives
        out = g.memo("idaq_out", _out_tables)

        best_cost, has_best, qsize = state.best_cost, state.has_best, queue.qsize
        threshold = K / W
        developed = [0] * K
        scanned = [0] * K
        seen_nodes, seen_paths = set(), set()

        queue.push(PathRecord(None, self.s, None, (0.0,) * W, 0, 0, np.zeros(K)))
        seq = 1
        while True:
            while queue.heap._root is None:
                if state.iteration == K:
                    stats.developed_per_iteration = developed
                    stats.scanned_per_iteration = scanned
                    stats.developed_paths = sum(developed)
                    stats.scanned_paths = sum(scanned)
                    stats.heap_ops = queue.heap_ops
                    solutions = build_sets(state, self.lambdas, g)
                    stats.wall_time = time.perf_counter() - t0
                    return solutions, stats
                state.iteration += 1
                queue.adapt(state.iteration)
                seen_nodes = set()
            p = queue.pop()
            it = state.iteration - 1
            developed[it] += 1
            state.optimal_paths.append(p)
            if self.debug:
                self._check_pop(p, seen_nodes, seen_paths)
            eids, tg, eidl, tgl, dup = out[p.end_node]
            d = len(eidl)
            if d == 0:
                continue
            scanned[it] += d
            n_acc = np.add(p.acc, objectives[eids])
            s_acc = sample_acc[tg]
            drop = (s_acc <= n_acc).all(axis=1) & (s_acc < n_acc).any(axis=1)
            n_filtered = int(drop.sum())
            stats.sample_filtered += n_filtered
            n_cost = p.costs + edge_costs[eids]
            if not dup:
                # nodes already in optimality mode: a path that beats no
                # tabulated cost is rejected without further work
                hopeless = has_best[tg] & (qsize[tg] >= threshold)
                hopeless &= ~(n_cost < best_cost[tg]).any(axis=1)
                hopeless &= ~drop
                stats.optimality_checks += int(hopeless.sum())
                stats.rejected += int(hopeless.sum())
                drop |= hopeless
            keep = np.flatnonzero(~drop).tolist()
            if not keep:
                continue
            rows = n_acc.tolist()
            parent_len = p.length + 1
            for j in keep:
                nxt = PathRecord(p, tgl[j], eidl[j], tuple(rows[j]), parent_len, seq, n_cost[j])
                seq += 1
                if is_relevant(nxt, state, queue):
                    stats.pushed_paths += 1
                    queue.push(nxt)
                else:
                    stats.rejected += 1

    def _check_pop(self, p, seen_nodes, seen_paths):
        if p.end_node in seen_nodes:
            raise VerificationError(
                f"node {p.end_node} developed twice in iteration {self.state.iteration}")
        seen_nodes.add(p.end_node)
        key = tuple(p.edge_ids())
        if key in seen_paths:
            raise VerificationError(f"path {p.nodes()} developed twice")
        seen_paths.add(key)
        self.state.trace.append((self.state.iteration, p))


def _out_tables(g):
    """Per node: edge ids and targets as arrays and lists, plus a flag for
    repeated targets (parallel edges)."""
    offsets, order = g.csr()
    out = []
    for u in range(g.node_count):
        eids = order[offsets[u]:offsets[u + 1]]
        tg = g.dst[eids]
        tgl = tg.tolist()
        out.append((eids, tg, eids.tolist(), tgl, len(set(tgl)) != len(tgl)))
    return out


def solve_idaq(g: Mog, s: int, lambdas, debug: bool = False, return_solver: bool = False):
    """Solve all coefficient vectors in one shared search.

    Returns ``(solutions, stats)``; with ``return_solver=True`` the
    :class:`IdaqSolver` (queue, state, debug trace) comes back third.
    """
    solver = IdaqSolver(g, s, lambdas, debug=debug)
    solutions, stats = solver.run()
    if return_solver:
        return solutions, stats, solver
    return solutions, stats
