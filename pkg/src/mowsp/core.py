"""Multi-objective graphs, coefficient vectors, paths and Pareto dominance.

A :class:`Mog` is a directed graph whose edges carry ``W`` non-negative
additive objective values.  A coefficient vector turns an objective vector
into a scalar cost by a dot product; a :class:`LambdaSet` is an ordered list
of ``K`` such vectors.  Paths from the source are persistent linked records
(:class:`PathRecord`) that carry the component-wise objective totals, so the
cost of a path under any coefficient vector is an ``O(W)`` dot product.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InputError, LogicError

TAG_NAMES = ("bicycle_road", "near_highway", "near_buildings")


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class EdgeRecord:
    source: int
    target: int
    objectives: tuple
    tags: frozenset = frozenset()


class Mog:
    """Directed multi-objective graph.

    Edges are stored column-wise: ``src[i] -> dst[i]`` with objective row
    ``objectives[i]``.  Edge ids are the row indices.  Arrays are read-only
    after construction.

    Content checks (negative objectives, dangling endpoints) are left to
    :func:`validate_mog` so malformed graphs can still be inspected.
    """

    __slots__ = ("node_count", "src", "dst", "objectives", "coords", "tags",
                 "_csr", "_adj", "_memo")

    def __init__(self, node_count, src, dst, objectives, coords=None, tags=None):
        node_count = int(node_count)
        if node_count < 1:
            raise InputError("a graph needs at least one node")
        src = np.asarray(src, dtype=np.int64).reshape(-1)
        dst = np.asarray(dst, dtype=np.int64).reshape(-1)
        objectives = np.array(objectives, dtype=np.float64)
        if objectives.ndim == 1 and len(src) == 0:
            objectives = objectives.reshape(0, max(objectives.size, 1))
        if objectives.ndim != 2 or objectives.shape[1] < 1:
            raise InputError("objectives must be an (E, W) array with W >= 1")
        if not (len(src) == len(dst) == objectives.shape[0]):
            raise InputError("src, dst and objectives disagree on the edge count")
        if coords is not None:
            coords = np.array(coords, dtype=np.float64)
            if coords.shape != (node_count, 2):
                raise InputError(f"coords must have shape ({node_count}, 2)")
            coords = _frozen(coords)
        if tags is not None:
            tags = np.array(tags, dtype=bool)
            if tags.shape != (len(src), len(TAG_NAMES)):
                raise InputError(f"tags must have shape ({len(src)}, {len(TAG_NAMES)})")
            tags = _frozen(tags)
        object.__setattr__(self, "node_count", node_count)
        object.__setattr__(self, "src", _frozen(src.copy()))
        object.__setattr__(self, "dst", _frozen(dst.copy()))
        object.__setattr__(self, "objectives", _frozen(objectives))
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "tags", tags)
        object.__setattr__(self, "_csr", None)
        object.__setattr__(self, "_adj", None)
        object.__setattr__(self, "_memo", {})

    def __setattr__(self, name, value):
        raise AttributeError("Mog is immutable")

    @classmethod
    def from_edges(cls, node_count, edges, W=None, coords=None):
        """Build from ``(u, v, objectives)`` triples or :class:`EdgeRecord` items."""
        src, dst, obj, tags = [], [], [], []
        has_tags = False
        for e in edges:
            if isinstance(e, EdgeRecord):
                u, v, w = e.source, e.target, e.objectives
                tags.append([t in e.tags for t in TAG_NAMES])
                has_tags = has_tags or bool(e.tags)
            else:
                u, v, w = e
                tags.append([False] * len(TAG_NAMES))
            src.append(u)
            dst.append(v)
            obj.append(list(w))
        if W is None:
            if not obj:
                raise InputError("W is required for a graph without edges")
            W = len(obj[0])
        if any(len(w) != W for w in obj):
            raise InputError("every edge must carry exactly W objectives")
        objectives = np.array(obj, dtype=np.float64).reshape(len(obj), W)
        return cls(node_count, src, dst, objectives, coords=coords,
                   tags=np.array(tags, dtype=bool).reshape(len(obj), 3) if has_tags else None)

    @property
    def W(self) -> int:
        return self.objectives.shape[1]

    @property
    def edge_count(self) -> int:
        return len(self.src)

    def edge(self, i: int) -> EdgeRecord:
        tags = frozenset()
        if self.tags is not None:
            tags = frozenset(n for n, flag in zip(TAG_NAMES, self.tags[i]) if flag)
        return EdgeRecord(int(self.src[i]), int(self.dst[i]),
                          tuple(self.objectives[i].tolist()), tags)

    @property
    def edges(self) -> list:
        return [self.edge(i) for i in range(self.edge_count)]

    def with_objectives(self, objectives) -> "Mog":
        return Mog(self.node_count, self.src, self.dst, objectives, self.coords, self.tags)

    def csr(self):
        """Out-adjacency as ``(offsets, edge_ids)``; edges of node ``u`` are
        ``edge_ids[offsets[u]:offsets[u + 1]]`` in increasing id order."""
        if self._csr is None:
            order = np.argsort(self.src, kind="stable")
            counts = np.bincount(self.src, minlength=self.node_count) if len(self.src) else \
                np.zeros(self.node_count, dtype=np.int64)
            offsets = np.zeros(self.node_count + 1, dtype=np.int64)
            np.cumsum(counts, out=offsets[1:])
            object.__setattr__(self, "_csr", (_frozen(offsets), _frozen(order)))
        return self._csr

    def adjacency(self) -> list:
        """Per-node list of ``(target, edge_id)`` pairs, increasing edge id."""
        if self._adj is None:
            offsets, order = self.csr()
            dst = self.dst.tolist()
            ids = order.tolist()
            adj = [[(dst[i], i) for i in ids[offsets[u]:offsets[u + 1]]]
                   for u in range(self.node_count)]
            object.__setattr__(self, "_adj", adj)
        return self._adj

    def memo(self, key, build):
        """Cache ``build(self)`` under ``key``; graph-derived lookup tables only."""
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = build(self)
            return value

    def out_degree(self) -> np.ndarray:
        return np.bincount(self.src, minlength=self.node_count)

    def in_degree(self) -> np.ndarray:
        return np.bincount(self.dst, minlength=self.node_count)

    def __eq__(self, other):
        if not isinstance(other, Mog):
            return NotImplemented
        def same(a, b):
            if a is None or b is None:
                return a is None and b is None
            return a.shape == b.shape and np.array_equal(a, b)
        return (self.node_count == other.node_count and same(self.src, other.src)
                and same(self.dst, other.dst) and same(self.objectives, other.objectives)
                and same(self.coords, other.coords) and same(self.tags, other.tags))

    __hash__ = None

    def __repr__(self):
        return f"Mog(|V|={self.node_count}, |E|={self.edge_count}, W={self.W})"


def as_coefficients(lam, W: Optional[int] = None) -> np.ndarray:
    """Validate a single coefficient vector: ``W`` strictly positive finite reals."""
    a = np.array(lam, dtype=np.float64).reshape(-1)
    if a.size == 0:
        raise InputError("empty coefficient vector")
    if W is not None and a.size != W:
        raise InputError(f"coefficient vector has length {a.size}, expected {W}")
    if not np.all(np.isfinite(a)) or np.any(a <= 0):
        raise InputError("coefficients must be finite and strictly positive")
    return _frozen(a)


class LambdaSet:
    """Ordered list of ``K`` coefficient vectors sharing one dimension ``W``."""

    __slots__ = ("matrix",)

    def __init__(self, vectors):
        try:
            m = np.array(vectors, dtype=np.float64)
        except ValueError:
            raise InputError("a LambdaSet needs K >= 1 vectors of equal length W >= 1") from None
        if m.ndim == 1:
            m = m.reshape(1, -1)
        if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
            raise InputError("a LambdaSet needs K >= 1 vectors of equal length W >= 1")
        if not np.all(np.isfinite(m)) or np.any(m <= 0):
            raise InputError("coefficients must be finite and strictly positive")
        self.matrix = _frozen(m)

    @property
    def K(self) -> int:
        return self.matrix.shape[0]

    @property
    def W(self) -> int:
        return self.matrix.shape[1]

    def __len__(self):
        return self.K

    def __getitem__(self, i):
        return self.matrix[i]

    def __iter__(self):
        return iter(self.matrix)

    def __eq__(self, other):
        if not isinstance(other, LambdaSet):
            return NotImplemented
        return self.matrix.shape == other.matrix.shape and np.array_equal(self.matrix, other.matrix)

    __hash__ = None

    def __repr__(self):
        return f"LambdaSet(K={self.K}, W={self.W})"


def as_lambda_set(lambdas) -> LambdaSet:
    return lambdas if isinstance(lambdas, LambdaSet) else LambdaSet(lambdas)


class PathRecord:
    """A path from the source, stored as a link to its parent path.

    ``acc`` is the component-wise objective total of the path, a tuple.  ``costs`` is
    an optional cache of the path's cost under every coefficient vector of
    the run that created it.  Records are never mutated once built.
    """

    __slots__ = ("parent", "end_node", "via_edge", "acc", "length", "push_seq", "costs")

    def __init__(self, parent, end_node, via_edge, acc, length, push_seq, costs=None):
        self.parent = parent
        self.end_node = end_node
        self.via_edge = via_edge
        self.acc = acc
        self.length = length
        self.push_seq = push_seq
        self.costs = costs

    @classmethod
    def seed(cls, node: int, W: int, costs=None) -> "PathRecord":
        return cls(None, int(node), None, (0.0,) * W, 0, 0, costs)

    def nodes(self) -> list:
        out = []
        p = self
        while p is not None:
            out.append(p.end_node)
            p = p.parent
        out.reverse()
        return out

    def edge_ids(self) -> list:
        out = []
        p = self
        while p.parent is not None:
            out.append(p.via_edge)
            p = p.parent
        out.reverse()
        return out

    def __repr__(self):
        return f"PathRecord({self.nodes()}, acc={list(self.acc)})"


def _check_dims(a, b):
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")


def edge_cost(e, lam) -> float:
    """Scalar cost of an edge: dot product of its objectives with ``lam``."""
    w = e.objectives if isinstance(e, EdgeRecord) else e
    _check_dims(w, lam)
    return float(np.dot(np.asarray(w, dtype=np.float64), np.asarray(lam, dtype=np.float64)))


def path_cost(p: PathRecord, lam) -> float:
    _check_dims(p.acc, lam)
    return float(np.dot(p.acc, np.asarray(lam, dtype=np.float64)))


def dominates(x, y) -> bool:
    """True iff ``x <= y`` component-wise and ``x < y`` somewhere."""
    _check_dims(x, y)
    x = np.asarray(x)
    y = np.asarray(y)
    return bool(np.all(x <= y) and np.any(x < y))


def weakly_dominates(x, y) -> bool:
    _check_dims(x, y)
    return bool(np.all(np.asarray(x) <= np.asarray(y)))


def extend_path(p: PathRecord, e: EdgeRecord, seq: int, edge_id: Optional[int] = None) -> PathRecord:
    """Append edge ``e`` to ``p``; the new record shares ``p`` as its parent."""
    if p.end_node != e.source:
        raise LogicError(f"edge {e.source}->{e.target} does not start at path end {p.end_node}")
    _check_dims(p.acc, e.objectives)
    acc = tuple(a + float(b) for a, b in zip(p.acc, e.objectives))
    return PathRecord(p, e.target, edge_id, acc, p.length + 1, seq)


def path_from_nodes(g: Mog, nodes: Sequence[int], lam=None) -> PathRecord:
    """Materialize a node list as a PathRecord, picking the cheapest parallel
    edge under ``lam`` (or the lowest edge id when ``lam`` is None)."""
    offsets, order = g.csr()
    p = PathRecord.seed(nodes[0], g.W)
    for k, (u, v) in enumerate(zip(nodes, nodes[1:]), start=1):
        cand = [int(i) for i in order[offsets[u]:offsets[u + 1]] if g.dst[i] == v]
        if not cand:
            raise InputError(f"no edge {u}->{v}")
        if lam is not None:
            cand.sort(key=lambda i: (float(g.objectives[i] @ lam), i))
        p = extend_path(p, g.edge(cand[0]), k, edge_id=cand[0])
    return p


@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self):
        # truthy when there is something to report
        return bool(self.errors or self.warnings)


def validate_mog(g: Mog) -> ValidationReport:
    report = ValidationReport()
    n = g.node_count
    for i in np.flatnonzero((g.src < 0) | (g.src >= n) | (g.dst < 0) | (g.dst >= n)):
        report.errors.append(f"edge {i}: endpoint out of range [0, {n})")
    bad = ~np.isfinite(g.objectives) | (g.objectives < 0)
    for i in np.flatnonzero(bad.any(axis=1)):
        report.errors.append(f"edge {i}: objectives must be finite and >= 0, got {g.objectives[i].tolist()}")
    zero = np.all(g.objectives == 0, axis=1)
    for i in np.flatnonzero(zero):
        kind = "self-loop" if g.src[i] == g.dst[i] else "edge"
        report.warnings.append(f"edge {i}: all-zero objective {kind} (zero-cost cycle hazard)")
    return report


def check_instance(g: Mog, s: int, lambdas=None) -> Optional[LambdaSet]:
    """Raise :class:`InputError` unless ``(g, s, lambdas)`` is solvable."""
    if not isinstance(g, Mog):
        raise InputError("expected a Mog")
    report = validate_mog(g)
    if report.errors:
        raise InputError("invalid graph: " + "; ".join(report.errors[:3]))
    if not (0 <= int(s) < g.node_count):
        raise InputError(f"source {s} out of range [0, {g.node_count})")
    if lambdas is None:
        return None
    lambdas = as_lambda_set(lambdas)
    if lambdas.W != g.W:
        raise InputError(f"coefficient vectors have W={lambdas.W}, graph has W={g.W}")
    return lambdas
