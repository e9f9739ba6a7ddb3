import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mowsp import (FormatError, InputError, LambdaSet, Mog, export_geojson, instance_digest, random_tagged_graph,
                   read_graph, read_lambdas, solution_document, solve_idaq, solve_standard, verify_solutions,
                   write_graph, write_lambdas)
from mowsp.io import dumps_graph, dumps_lambdas, loads_graph, loads_lambdas
from _instances import G1_LAMBDAS, g1


def test_g1_round_trip(tmp_path):
    g = g1(coords=True)
    write_graph(g, tmp_path / "g.txt")
    assert read_graph(tmp_path / "g.txt") == g
    assert (tmp_path / "g.txt").read_text().splitlines()[0] == "mowsp-graph 1 3 4 2 coords"


def test_tags_round_trip():
    g = random_tagged_graph(20, 60, seed=4).with_objectives(np.random.default_rng(0).random((60, 3)))
    h = loads_graph(dumps_graph(g))
    assert h == g and np.array_equal(h.tags, g.tags)


floats = st.floats(0, 1e6, allow_nan=False, allow_infinity=False)


@settings(max_examples=50)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), floats, floats), max_size=20))
def test_round_trip_bit_exact(edges):
    g = Mog.from_edges(5, [(u, v, (a, b)) for u, v, a, b in edges], W=2)
    h = loads_graph(dumps_graph(g))
    assert h.objectives.tobytes() == g.objectives.tobytes()
    assert h == g


@pytest.mark.parametrize("text,line", [
    ("mowsp-graph 1 3 3 2\ne 0 1 1 4\ne 0 2 4 1\n", None),
    ("mowsp-graph 1 3 1 2\ne 0 1 1 -4\n", 2),
    ("mowsp-graph 1 3 1 2\ne 0 1 1\n", 2),
    ("mowsp-graph 1 3 1 2\ne 0 7 1 1\n", 2),
    ("mowsp-graph 1 3 1 2\n# comment\ne 0 1 x 1\n", 3),
    ("mowsp-graph 1 3 1 2\ne 0 1 nan 1\n", 2),
    ("mowsp-graph 2 3 1 2\ne 0 1 1 1\n", 1),
    ("graph 3 1 2\n", 1),
    ("mowsp-graph 1 2 0 1 coords\nn 0 0 0\n", None),
    ("mowsp-graph 1 2 1 1 tags\ne 0 1 1 10\n", 2),
    ("", 1),
])
def test_graph_format_errors(text, line):
    with pytest.raises(FormatError) as ei:
        loads_graph(text)
    assert ei.value.line == line
    if line is not None:
        assert f"line {line}" in str(ei.value)


def test_lambda_files(tmp_path):
    path = tmp_path / "l.txt"
    path.write_text("mowsp-lambda 1 3 2\n1 1\n3 1\n1 3\n")
    lam = read_lambdas(path)
    assert lam == G1_LAMBDAS
    write_lambdas(lam, path)
    assert read_lambdas(path) == lam
    with pytest.raises(FormatError):
        loads_lambdas("mowsp-lambda 1 1 2\n1 0\n")
    with pytest.raises(FormatError):
        loads_lambdas("mowsp-lambda 1 2 2\n1 1\n")
    with pytest.raises(FormatError):
        loads_lambdas("mowsp-lambda 1 1 2\n1 1 1\n")


def test_w_mismatch_at_solve():
    with pytest.raises(InputError):
        solve_idaq(g1(), 0, loads_lambdas("mowsp-lambda 1 1 3\n1 1 1\n"))


def docs(g=None, lam=G1_LAMBDAS):
    g = g or g1(coords=True)
    a = solution_document(g, 0, lam, solve_standard(g, 0, lam)[0], "standard")
    b = solution_document(g, 0, lam, solve_idaq(g, 0, lam)[0], "idaq")
    return g, a, b


def test_verify_pass():
    g, a, b = docs()
    rep = verify_solutions(a, b, graph=g)
    assert rep.passed and rep.compared == 9
    assert verify_solutions(a, b).passed
    json.dumps(a)


def test_verify_perturbed_cost():
    _, a, b = docs()
    b["solutions"][1]["entries"][2]["cost"] += 1e-3
    rep = verify_solutions(a, b)
    assert not rep.passed
    assert rep.first_divergence.startswith("lambda 2, node 2")


def test_verify_integrity():
    g, a, b = docs()
    # swap a stored path for one that costs more; costs still agree
    entry = b["solutions"][1]["entries"][2]
    entry["path"], entry["edges"] = [0, 2], [1]
    entry["objectives"] = [4.0, 1.0]
    rep = verify_solutions(a, b, graph=g)
    assert not rep.passed and rep.failures[0].startswith("integrity")
    assert not verify_solutions(a, b).passed


def test_verify_digest_mismatch():
    _, a, _ = docs()
    _, _, b = docs(lam=LambdaSet([[1, 1], [3, 1], [1, 4]]))
    with pytest.raises(InputError):
        verify_solutions(a, b)


def test_digest_depends_on_instance():
    g = g1()
    assert instance_digest(g, G1_LAMBDAS, 0) == instance_digest(g1(), G1_LAMBDAS, 0)
    assert instance_digest(g, G1_LAMBDAS, 0) != instance_digest(g, G1_LAMBDAS, 1)


def test_geojson():
    g, a, _ = docs()
    gj = export_geojson(g, a, [2])
    assert gj["type"] == "FeatureCollection" and len(gj["features"]) == 3
    f = gj["features"][1]
    assert f["geometry"]["type"] == "LineString"
    assert f["geometry"]["coordinates"] == [[0.0, 0.0], [1.0, 0.0], [0.5, 1.0]]
    assert f["properties"]["lambda_index"] == 2 and f["properties"]["cost"] == 11


def test_geojson_unreachable_and_no_coords():
    g = Mog(3, [0], [1], [[1.0, 1.0]], coords=[[0, 0], [1, 1], [2, 2]])
    doc = solution_document(g, 0, [[1, 1]], solve_idaq(g, 0, [[1, 1]])[0], "idaq")
    with pytest.warns(UserWarning, match="unreachable"):
        gj = export_geojson(g, doc, [1, 2])
    assert len(gj["features"]) == 1
    with pytest.raises(InputError):
        export_geojson(g1(), doc, [1])
