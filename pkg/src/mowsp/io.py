"""Text formats for graphs and coefficient vectors, JSON solution files,
solution verification and GeoJSON route export.

Graph file::

    mowsp-graph 1 <|V|> <|E|> <W> [coords] [tags]
    n <id> <x> <y>                       # one per node when "coords" is set
    e <from> <to> <w1> ... <wW> [bits]   # bits: 3 chars of 0/1 when "tags" is set

Lambda file::

    mowsp-lambda 1 <K> <W>
    <c1> ... <cW>                        # K lines

Blank lines and ``#`` comments are ignored.  Floats are written with
``repr`` so a write/read cycle is bit-exact.
"""
from __future__ import annotations

import hashlib
import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .core import TAG_NAMES, LambdaSet, Mog, as_lambda_set
from .errors import FormatError, InputError

GRAPH_MAGIC = "mowsp-graph"
LAMBDA_MAGIC = "mowsp-lambda"
SOLUTION_FORMAT = "mowsp-solution"


def _fmt(x: float) -> str:
    return repr(float(x))


def _lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok, no, what):
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}", no) from None


def _float(tok, no, what):
    try:
        x = float(tok)
    except ValueError:
        raise FormatError(f"{what} must be a decimal number, got {tok!r}", no) from None
    if not math.isfinite(x):
        raise FormatError(f"{what} must be finite, got {tok!r}", no)
    return x


# -- graphs ---------------------------------------------------------------

def dumps_graph(g: Mog) -> str:
    flags = []
    if g.coords is not None:
        flags.append("coords")
    if g.tags is not None:
        flags.append("tags")
    out = [" ".join([GRAPH_MAGIC, "1", str(g.node_count), str(g.edge_count), str(g.W)] + flags)]
    if g.coords is not None:
        for i, (x, y) in enumerate(g.coords.tolist()):
            out.append(f"n {i} {_fmt(x)} {_fmt(y)}")
    src, dst = g.src.tolist(), g.dst.tolist()
    obj = g.objectives.tolist()
    tags = g.tags.tolist() if g.tags is not None else None
    for i in range(g.edge_count):
        parts = ["e", str(src[i]), str(dst[i])] + [_fmt(w) for w in obj[i]]
        if tags is not None:
            parts.append("".join("1" if t else "0" for t in tags[i]))
        out.append(" ".join(parts))
    return "\n".join(out) + "\n"


def loads_graph(text: str) -> Mog:
    lines = _lines(text)
    try:
        no, head = next(lines)
    except StopIteration:
        raise FormatError("empty graph file", 1) from None
    if len(head) < 5 or head[0] != GRAPH_MAGIC:
        raise FormatError(f"expected '{GRAPH_MAGIC} 1 <V> <E> <W> [coords] [tags]'", no)
    if head[1] != "1":
        raise FormatError(f"unsupported graph format version {head[1]!r}", no)
    n = _int(head[2], no, "|V|")
    m = _int(head[3], no, "|E|")
    W = _int(head[4], no, "W")
    flags = set(head[5:])
    if flags - {"coords", "tags"}:
        raise FormatError(f"unknown header flags {sorted(flags - {'coords', 'tags'})}", no)
    if n < 1 or m < 0 or W < 1:
        raise FormatError("header needs |V| >= 1, |E| >= 0, W >= 1", no)
    has_coords, has_tags = "coords" in flags, "tags" in flags
    coords = np.full((n, 2), np.nan) if has_coords else None
    seen_nodes = set()
    src, dst, obj, tags = [], [], [], []
    for no, tok in lines:
        kind = tok[0]
        if kind == "n":
            if not has_coords:
                raise FormatError("coordinate line in a graph without 'coords'", no)
            if len(tok) != 4:
                raise FormatError("node line must be 'n <id> <x> <y>'", no)
            i = _int(tok[1], no, "node id")
            if not 0 <= i < n:
                raise FormatError(f"node id {i} out of range [0, {n})", no)
            if i in seen_nodes:
                raise FormatError(f"duplicate coordinates for node {i}", no)
            seen_nodes.add(i)
            coords[i] = (_float(tok[2], no, "x"), _float(tok[3], no, "y"))
        elif kind == "e":
            want = 3 + W + (1 if has_tags else 0)
            if len(tok) != want:
                raise FormatError(f"edge line needs {want} fields, got {len(tok)}", no)
            u, v = _int(tok[1], no, "from"), _int(tok[2], no, "to")
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"edge endpoint out of range [0, {n})", no)
            w = [_float(t, no, "objective") for t in tok[3:3 + W]]
            if any(x < 0 for x in w):
                raise FormatError("objectives must be non-negative", no)
            if has_tags:
                bits = tok[-1]
                if len(bits) != len(TAG_NAMES) or set(bits) - {"0", "1"}:
                    raise FormatError(f"tag bits must be {len(TAG_NAMES)} chars of 0/1", no)
                tags.append([b == "1" for b in bits])
            src.append(u)
            dst.append(v)
            obj.append(w)
        else:
            raise FormatError(f"unknown line type {kind!r}", no)
    if len(src) != m:
        raise FormatError(f"header declares {m} edges, body has {len(src)}")
    if has_coords and len(seen_nodes) != n:
        raise FormatError(f"header declares coordinates for {n} nodes, body has {len(seen_nodes)}")
    return Mog(n, src, dst, np.array(obj, dtype=np.float64).reshape(m, W),
               coords=coords, tags=np.array(tags, dtype=bool).reshape(m, 3) if has_tags else None)


def write_graph(g: Mog, path) -> None:
    Path(path).write_text(dumps_graph(g))


def read_graph(path) -> Mog:
    return loads_graph(Path(path).read_text())


# -- coefficient vectors --------------------------------------------------

def dumps_lambdas(lambdas) -> str:
    lam = as_lambda_set(lambdas)
    out = [f"{LAMBDA_MAGIC} 1 {lam.K} {lam.W}"]
    out += [" ".join(_fmt(c) for c in row) for row in lam.matrix.tolist()]
    return "\n".join(out) + "\n"


def loads_lambdas(text: str) -> LambdaSet:
    lines = _lines(text)
    try:
        no, head = next(lines)
    except StopIteration:
        raise FormatError("empty lambda file", 1) from None
    if len(head) != 4 or head[0] != LAMBDA_MAGIC or head[1] != "1":
        raise FormatError(f"expected '{LAMBDA_MAGIC} 1 <K> <W>'", no)
    K, W = _int(head[2], no, "K"), _int(head[3], no, "W")
    if K < 1 or W < 1:
        raise FormatError("header needs K >= 1 and W >= 1", no)
    rows = []
    for no, tok in lines:
        if len(tok) != W:
            raise FormatError(f"coefficient line needs {W} values, got {len(tok)}", no)
        row = [_float(t, no, "coefficient") for t in tok]
        if any(c <= 0 for c in row):
            raise FormatError("coefficients must be strictly positive", no)
        rows.append(row)
    if len(rows) != K:
        raise FormatError(f"header declares {K} vectors, body has {len(rows)}")
    return LambdaSet(rows)


def write_lambdas(lambdas, path) -> None:
    Path(path).write_text(dumps_lambdas(lambdas))


def read_lambdas(path) -> LambdaSet:
    return loads_lambdas(Path(path).read_text())


def instance_digest(g: Mog, lambdas, source: int) -> str:
    """SHA-256 over the canonical graph and lambda text plus the source."""
    h = hashlib.sha256()
    h.update(dumps_graph(g).encode())
    h.update(dumps_lambdas(lambdas).encode())
    h.update(f"source {int(source)}\n".encode())
    return h.hexdigest()


# -- solution files -------------------------------------------------------

def solution_document(g: Mog, s: int, lambdas, solutions, algorithm: str,
                      stats=None, include_paths: bool = True) -> dict:
    """JSON-ready description of a solver result."""
    lam = as_lambda_set(lambdas)
    per = []
    for i, sol in enumerate(solutions):
        entries = []
        for v in sol.reachable_nodes():
            entry = {"node": int(v), "cost": float(sol.cost[v])}
            if include_paths:
                edges = sol.edge_path(v)
                entry["path"] = sol.path(v)
                entry["edges"] = edges
                acc = g.objectives[edges].sum(axis=0) if edges else np.zeros(g.W)
                entry["objectives"] = acc.tolist()
            entries.append(entry)
        per.append({"lambda_index": i + 1, "lambda": lam[i].tolist(), "entries": entries})
    doc = {
        "format": SOLUTION_FORMAT,
        "version": 1,
        "digest": instance_digest(g, lam, s),
        "algorithm": algorithm,
        "source": int(s),
        "K": lam.K,
        "W": lam.W,
        "node_count": g.node_count,
        "solutions": per,
    }
    if stats is not None:
        d = stats.as_dict() if hasattr(stats, "as_dict") else dict(stats)
        doc["stats"] = {k: v for k, v in d.items() if not isinstance(v, list)}
    return doc


def write_solution(doc: dict, path) -> None:
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")


def read_solution(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"solution file is not JSON: {exc.msg}", exc.lineno) from None
    if doc.get("format") != SOLUTION_FORMAT:
        raise FormatError(f"not a {SOLUTION_FORMAT} document")
    return doc


@dataclass
class VerifyReport:
    passed: bool
    compared: int = 0
    failures: list = field(default_factory=list)

    @property
    def first_divergence(self) -> Optional[str]:
        return self.failures[0] if self.failures else None

    def __str__(self):
        if self.passed:
            return f"PASS ({self.compared} costs compared)"
        return f"FAIL: {self.first_divergence} ({len(self.failures)} problem(s))"


def _close(a, b, tol):
    if a == b:
        return True
    return abs(a - b) <= tol * max(abs(a), abs(b))


def _integrity(doc, g, tol, failures):
    """Re-cost every stored path; appends to ``failures``."""
    for block in doc["solutions"]:
        i = block["lambda_index"]
        lam = np.asarray(block["lambda"], dtype=np.float64)
        for e in block["entries"]:
            if "objectives" not in e and "edges" not in e:
                continue
            v = e["node"]
            if g is not None and "edges" in e:
                edges = e["edges"]
                nodes = [doc["source"]] + [int(g.dst[k]) for k in edges]
                ok_chain = all(int(g.src[k]) == a for k, a in zip(edges, nodes))
                if not ok_chain or nodes[-1] != v or (e.get("path") not in (None, nodes)):
                    failures.append(f"integrity: ({doc['algorithm']}) lambda {i}, node {v}: "
                                    f"edge list does not form the stated path")
                    continue
                acc = g.objectives[edges].sum(axis=0) if edges else np.zeros(g.W)
            else:
                acc = np.asarray(e["objectives"], dtype=np.float64)
            c = float(acc @ lam)
            if not _close(c, e["cost"], tol):
                failures.append(f"integrity: ({doc['algorithm']}) lambda {i}, node {v}: "
                                f"path re-costs to {c!r}, file says {e['cost']!r}")


def verify_solutions(a: dict, b: dict, tol: float = 1e-9, graph: Optional[Mog] = None) -> VerifyReport:
    """Compare two solution documents for the same instance.

    PASS iff both list the same reachable nodes per vector, every cost pair
    agrees within relative ``tol``, and every stored path re-costs to its
    stated cost (against ``graph`` when given, otherwise against the stored
    objective totals).
    """
    if a.get("digest") != b.get("digest"):
        raise InputError("solution files describe different instances (digest mismatch)")
    if a.get("K") != b.get("K"):
        raise InputError("solution files disagree on K")
    failures = []
    compared = 0
    for ba, bb in zip(a["solutions"], b["solutions"]):
        i = ba["lambda_index"]
        ca = {e["node"]: e["cost"] for e in ba["entries"]}
        cb = {e["node"]: e["cost"] for e in bb["entries"]}
        for v in sorted(set(ca) | set(cb)):
            if v not in ca or v not in cb:
                failures.append(f"lambda {i}, node {v}: reachable in only one file")
                continue
            compared += 1
            if not _close(ca[v], cb[v], tol):
                failures.append(f"lambda {i}, node {v}: cost {ca[v]!r} vs {cb[v]!r}")
    for doc in (a, b):
        _integrity(doc, graph, tol, failures)
    return VerifyReport(not failures, compared, failures)


# -- GeoJSON --------------------------------------------------------------

def export_geojson(g: Mog, doc: dict, targets) -> dict:
    """One LineString per (coefficient vector, target) route."""
    if g.coords is None:
        raise InputError("GeoJSON export needs node coordinates")
    features = []
    coords = g.coords.tolist()
    for block in doc["solutions"]:
        by_node = {e["node"]: e for e in block["entries"]}
        for t in targets:
            e = by_node.get(int(t))
            if e is None:
                warnings.warn(f"target {t} unreachable under lambda {block['lambda_index']}; skipped")
                continue
            if e.get("path") is None:
                raise InputError("solution file was written without paths")
            line = [coords[v] for v in e["path"]]
            if len(line) == 1:
                line = line * 2  # LineString needs two positions
            features.append({
                "type": "Feature",
                "geometry": {"type": "LineString", "coordinates": line},
                "properties": {"lambda_index": block["lambda_index"], "cost": e["cost"],
                               "target": int(t), "nodes": e["path"]},
            })
    return {"type": "FeatureCollection", "features": features}
