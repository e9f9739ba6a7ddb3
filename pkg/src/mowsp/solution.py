"""Per-coefficient-vector solution sets returned by the solvers."""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np


@dataclass
class SolutionSet:
    """Optimal paths from the source for one coefficient vector.

    ``cost[v]`` is ``inf`` for nodes the source cannot reach.  Paths are kept
    either as a shortest-path tree (standard solver) or as one
    :class:`~mowsp.core.PathRecord` per node (IDAQ, oracle).
    """

    lambda_index: int
    cost: np.ndarray
    tree: Optional[object] = None
    records: Optional[dict] = field(default=None, repr=False)

    def reachable_nodes(self) -> list:
        return np.flatnonzero(np.isfinite(self.cost)).tolist()

    def __contains__(self, v):
        return bool(np.isfinite(self.cost[v]))

    def path(self, v) -> Optional[list]:
        if not np.isfinite(self.cost[v]):
            return None
        if self.records is not None:
            return self.records[v].nodes()
        if self.tree is not None:
            return self.tree.path(v)
        return None

    def edge_path(self, v) -> Optional[list]:
        if not np.isfinite(self.cost[v]):
            return None
        if self.records is not None:
            return self.records[v].edge_ids()
        if self.tree is not None:
            return self.tree.edge_path(v)
        return None

    def as_dict(self) -> dict:
        return {v: float(self.cost[v]) for v in self.reachable_nodes()}


def cost_table(solutions) -> np.ndarray:
    """Stack per-vector costs into a ``(K, |V|)`` array (``inf`` = unreachable)."""
    return np.vstack([s.cost for s in solutions])
