"""Ground truth for small instances.

:func:`pareto_fronts` is a multicriteria label-setting search: labels leave
a lexicographically ordered heap, a label is made permanent unless a
permanent label at its node is component-wise no worse, and permanent labels
are extended along every out-edge.  Equal vectors collapse, so the search
terminates even with zero-objective cycles.

The front certifies per-vector optima (:func:`oracle_optimal_costs`) because
a cheapest path under a strictly positive coefficient vector is never
Pareto dominated.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import Mog, check_instance
from .errors import ResourceError

DEFAULT_LABEL_CAP = 10**6
_SMALL = 12


@dataclass
class ParetoFront:
    """Per-node Pareto non-dominated objective vectors with witness paths.

    ``vectors[v]`` is an ``(m_v, W)`` array (``m_v == 0`` when ``v`` is
    unreachable); ``witness(v, k)`` rebuilds a path whose totals are
    ``vectors[v][k]``.
    """

    source: int
    W: int
    vectors: list
    _labels: list = field(repr=False, default_factory=list)
    _index: list = field(repr=False, default_factory=list)
    labels_created: int = 0

    def counts(self) -> np.ndarray:
        return np.array([len(v) for v in self.vectors], dtype=np.int64)

    def witness(self, v: int, k: int) -> list:
        """Node list of the ``k``-th front path at ``v``."""
        lab = self._index[v][k]
        nodes = []
        while lab is not None:
            node, parent, _ = self._labels[lab]
            nodes.append(node)
            lab = parent
        nodes.reverse()
        return nodes

    def witness_edges(self, v: int, k: int) -> list:
        lab = self._index[v][k]
        edges = []
        while lab is not None:
            _, parent, e = self._labels[lab]
            if parent is not None:
                edges.append(e)
            lab = parent
        edges.reverse()
        return edges

    def contains(self, v: int, vec) -> bool:
        vec = np.asarray(vec, dtype=np.float64)
        return bool(len(self.vectors[v]) and np.any(np.all(self.vectors[v] == vec, axis=1)))


def pareto_fronts(g: Mog, s: int, bound: Optional[int] = DEFAULT_LABEL_CAP) -> ParetoFront:
    """Complete Pareto front at every node reachable from ``s``.

    Raises :class:`ResourceError` once more than ``bound`` labels have been
    generated; the front is never silently truncated.
    """
    check_instance(g, s)
    n, W = g.node_count, g.W
    adj = g.adjacency()
    obj = [tuple(r) for r in g.objectives.tolist()]
    perm = [[] for _ in range(n)]      # permanent vectors per node (tuples)
    perm_ids = [[] for _ in range(n)]  # matching label ids
    buf = [None] * n                   # numpy mirror of perm, for large fronts
    labels = []                        # (node, parent_label, edge)

    def covered(u, vec):
        front = perm[u]
        if len(front) < _SMALL:
            return any(all(a <= b for a, b in zip(f, vec)) for f in front)
        return bool((buf[u][:len(front)] <= vec).all(axis=1).any())

    zero = (0.0,) * W
    heap = [(zero, 0, int(s), None, None)]
    created = 1
    tick = 1
    while heap:
        acc, _, v, parent, e = heapq.heappop(heap)
        if covered(v, acc):
            continue
        lab = len(labels)
        labels.append((v, parent, e))
        front = perm[v]
        front.append(acc)
        perm_ids[v].append(lab)
        k = len(front)
        if k >= _SMALL:
            b = buf[v]
            if b is None or len(b) < k:
                grown = np.empty((max(2 * k, 32), W))
                grown[:k - 1] = front[:-1] if b is None else b[:k - 1]
                buf[v] = b = grown
            b[k - 1] = acc
        for u, eid in adj[v]:
            w = obj[eid]
            nxt = tuple(a + b for a, b in zip(acc, w))
            if covered(u, nxt):
                continue
            created += 1
            if bound is not None and created > bound:
                raise ResourceError(f"label cap {bound} exceeded; Pareto front too large")
            heapq.heappush(heap, (nxt, tick, u, lab, eid))
            tick += 1
    vectors = [np.array(f, dtype=np.float64).reshape(len(f), W) for f in perm]
    return ParetoFront(int(s), W, vectors, labels, perm_ids, created)


def oracle_optimal_costs(g: Mog, s: int, lambdas, front: Optional[ParetoFront] = None,
                         bound: Optional[int] = DEFAULT_LABEL_CAP) -> np.ndarray:
    """``(K, |V|)`` table of optimal costs; ``inf`` marks unreachable nodes."""
    lambdas = check_instance(g, s, lambdas)
    if front is None:
        front = pareto_fronts(g, s, bound)
    lam = lambdas.matrix
    out = np.full((lam.shape[0], g.node_count), np.inf)
    for v, vecs in enumerate(front.vectors):
        if len(vecs):
            out[:, v] = (vecs @ lam.T).min(axis=0)
    return out


@dataclass
class StructureDiagnostics:
    pareto_count: np.ndarray
    L: int
    alpha: dict
    gamma: dict
    D: float
    D_L: float
    max_in_degree: int
    max_out_degree: int
    N_L: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "pareto_count": self.pareto_count.tolist(),
            "L": self.L,
            "alpha": {str(k): v for k, v in self.alpha.items()},
            "gamma": {str(k): v for k, v in self.gamma.items()},
            "D": self.D,
            "D_L": self.D_L,
            "max_in_degree": self.max_in_degree,
            "max_out_degree": self.max_out_degree,
            "N_L": self.N_L,
        }


def _path_vectors(g: Mog, s: int, v: int, cap: int) -> np.ndarray:
    """Distinct objective vectors of simple ``s -> v`` paths (DFS, capped)."""
    adj = g.adjacency()
    obj = g.objectives
    found = set()
    stack = [(int(s), np.zeros(g.W), frozenset([int(s)]))]
    visited = 0
    while stack:
        x, acc, on = stack.pop()
        if x == v:
            found.add(tuple(acc.tolist()))
        visited += 1
        if visited > cap:
            raise ResourceError(f"more than {cap} partial paths while computing N_L")
        for u, e in adj[x]:
            if u not in on:
                stack.append((u, acc + obj[e], on | {u}))
    return np.array(sorted(found)).reshape(len(found), g.W)


def structure_diagnostics(g: Mog, s: int, front: ParetoFront, with_n_l: bool = False,
                          path_cap: int = 200_000) -> StructureDiagnostics:
    """Pareto-size statistics of an instance.

    ``alpha(l)`` is the share of nodes with at most ``l`` front vectors,
    ``gamma(l)`` the share of edges leaving such nodes, and ``L`` the
    smallest ``l`` with ``alpha(l) >= 1 - ln|V| / |V|``.  ``N_L`` (optional,
    expensive) is the largest number of distinct simple-path vectors at an
    L-node that a single front vector fails to dominate.
    """
    n, m = g.node_count, g.edge_count
    counts = front.counts()
    top = int(counts.max()) if n else 0
    out_deg = g.out_degree()
    target = 1.0 - math.log(n) / n
    alpha, gamma = {}, {}
    L = None
    for l in range(0, top + 1):
        mask = counts <= l
        alpha[l] = float(mask.sum() / n)
        gamma[l] = float(out_deg[mask].sum() / m) if m else 1.0
        if L is None and alpha[l] >= target:
            L = l
    if L is None:
        L = top
    mask = counts <= L
    d_l = float(out_deg[mask].sum() / mask.sum()) if mask.any() else 0.0
    n_l = None
    if with_n_l:
        n_l = 0
        for v in np.flatnonzero(mask & (counts > 0)).tolist():
            vecs = _path_vectors(g, s, v, path_cap)
            for f in front.vectors[v]:
                dominated = np.all(f <= vecs, axis=1) & np.any(f < vecs, axis=1)
                n_l = max(n_l, int((~dominated).sum()))
    return StructureDiagnostics(
        pareto_count=counts, L=int(L), alpha=alpha, gamma=gamma,
        D=m / n, D_L=d_l,
        max_in_degree=int(g.in_degree().max()) if m else 0,
        max_out_degree=int(out_deg.max()) if m else 0,
        N_L=n_l,
    )
