"""Operation counters reported by both solvers."""
from dataclasses import asdict, dataclass, field


@dataclass
class SolverStats:
    """Counters for one solver run.

    ``developed_paths`` counts heap pops that settle a path, ``scanned_paths``
    counts one-edge extensions of developed paths, ``cost_evaluations`` counts
    scalar edge/path cost computations (each one an ``O(W)`` dot product).
    """

    developed_paths: int = 0
    scanned_paths: int = 0
    cost_evaluations: int = 0
    heap_ops: int = 0
    wall_time: float = 0.0
    # per-iteration breakdown (index i-1 for iteration i)
    developed_per_iteration: list = field(default_factory=list)
    scanned_per_iteration: list = field(default_factory=list)
    # IDAQ only
    pushed_paths: int = 0
    sample_filtered: int = 0
    dominance_checks: int = 0
    optimality_checks: int = 0
    rejected: int = 0
    removed_paths: int = 0

    def as_dict(self):
        return asdict(self)
