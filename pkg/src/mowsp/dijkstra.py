"""Single-criterion shortest-path trees under one coefficient vector.

Edge costs ``objectives @ lam`` are evaluated once per call instead of
copying the graph; the heap is used with lazy deletion (stale entries are
skipped on pop) so no decrease-key is needed.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import Mog, PathRecord, as_coefficients, check_instance
from .heap import AddressableHeap
from .stats import SolverStats


@dataclass
class ShortestPathTree:
    """Costs and parent pointers from ``source``.

    ``cost[v]`` is ``inf`` and ``parent_node[v] == -1`` for unreachable ``v``.
    """

    source: int
    cost: np.ndarray
    parent_node: np.ndarray
    parent_edge: np.ndarray

    def reachable(self, v: int) -> bool:
        return bool(np.isfinite(self.cost[v]))

    def reachable_nodes(self) -> np.ndarray:
        return np.flatnonzero(np.isfinite(self.cost))

    def path(self, v: int) -> Optional[list]:
        """Node list from the source to ``v``, or None if unreachable."""
        if not self.reachable(v):
            return None
        out = [int(v)]
        while v != self.source:
            v = int(self.parent_node[v])
            out.append(v)
        out.reverse()
        return out

    def edge_path(self, v: int) -> Optional[list]:
        if not self.reachable(v):
            return None
        out = []
        while v != self.source:
            out.append(int(self.parent_edge[v]))
            v = int(self.parent_node[v])
        out.reverse()
        return out

    def path_records(self, g: Mog) -> dict:
        """One :class:`PathRecord` per reachable node, sharing tree prefixes."""
        records = {self.source: PathRecord.seed(self.source, g.W)}
        obj = g.objectives.tolist()
        for v in self.reachable_nodes().tolist():
            chain = []
            u = v
            while u not in records:
                chain.append(u)
                u = int(self.parent_node[u])
            for u in reversed(chain):
                p = records[int(self.parent_node[u])]
                e = int(self.parent_edge[u])
                acc = tuple(a + b for a, b in zip(p.acc, obj[e]))
                records[u] = PathRecord(p, u, e, acc, p.length + 1, 0)
        return records


def _search(adj, costs, n, s, stats):
    inf = float("inf")
    dist = [inf] * n
    parent = [-1] * n
    pedge = [-1] * n
    done = [False] * n
    heap = AddressableHeap()
    dist[s] = 0.0
    heap.insert(0.0, s)
    developed = scanned = 0
    while heap._root is not None:
        d, u = heap.pop_min()
        if done[u]:
            continue
        done[u] = True
        developed += 1
        for v, e in adj[u]:
            scanned += 1
            if done[v]:
                continue
            nd = d + costs[e]
            dv = dist[v]
            if nd < dv:
                dist[v] = nd
                parent[v] = u
                pedge[v] = e
                heap.insert(nd, v)
            elif nd == dv and (u < parent[v] or (u == parent[v] and e < pedge[v])):
                parent[v] = u
                pedge[v] = e
    if stats is not None:
        stats.developed_paths += developed
        stats.scanned_paths += scanned
        stats.heap_ops += heap.ops
        stats.developed_per_iteration.append(developed)
        stats.scanned_per_iteration.append(scanned)
    return dist, parent, pedge


def shortest_path_tree(g: Mog, s: int, lam, stats: Optional[SolverStats] = None,
                       validate: bool = True) -> ShortestPathTree:
    """Dijkstra from ``s`` with edge cost ``objectives @ lam``.

    Equal-cost alternatives resolve to the lower parent node id (then the
    lower edge id), so the returned tree is deterministic.
    """
    if validate:
        check_instance(g, s)
    lam = as_coefficients(lam, g.W)
    s = int(s)
    costs = (g.objectives @ lam).tolist()
    if stats is not None:
        stats.cost_evaluations += g.edge_count
    dist, parent, pedge = _search(g.adjacency(), costs, g.node_count, s, stats)
    return ShortestPathTree(s, np.array(dist), np.array(parent, dtype=np.int64),
                            np.array(pedge, dtype=np.int64))
