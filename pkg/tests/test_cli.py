import json

import pytest

from mowsp import cli_main, read_graph, read_lambdas
from mowsp.io import write_graph, write_lambdas
from _instances import G1_LAMBDAS, g1


@pytest.fixture
def files(tmp_path):
    write_graph(g1(coords=True), tmp_path / "g.txt")
    write_lambdas(G1_LAMBDAS, tmp_path / "l.txt")
    return tmp_path


def run(*argv):
    return cli_main([str(a) for a in argv])


def test_solve_verify(files):
    for algo in ("standard", "idaq", "oracle"):
        assert run("solve", "--algo", algo, "-g", files / "g.txt", "-l", files / "l.txt",
                   "-o", files / f"{algo}.json") == 0
    assert run("verify", files / "standard.json", files / "idaq.json") == 0
    assert run("verify", files / "oracle.json", files / "idaq.json", "-g", files / "g.txt") == 0
    doc = json.loads((files / "idaq.json").read_text())
    doc["solutions"][0]["entries"][1]["cost"] += 1e-3
    (files / "bad.json").write_text(json.dumps(doc))
    assert run("verify", files / "standard.json", files / "bad.json") == 1


def test_usage_errors(files, capsys):
    assert run("solve", "--algo", "nope", "-g", "x", "-l", "y", "-o", "z") == 2
    assert run("frobnicate") == 2
    assert run("solve", "--bogus") == 2
    assert "usage" in capsys.readouterr().err
    assert run("solve", "-g", files / "missing.txt", "-l", files / "l.txt", "-o", files / "o.json") == 2


def test_generators(files, monkeypatch):
    assert run("gen-waxman", "--intensity", 400, "--beta", 0.3, "-W", 3, "-o", files / "w.txt") == 0
    g = read_graph(files / "w.txt")
    assert g.W == 3 and g.coords is not None
    assert run("gen-lambdas", "-K", 4, "-W", 3, "--regime", "uncorrelated", "-o", files / "wl.txt") == 0
    lam = read_lambdas(files / "wl.txt")
    assert lam.K == 4 and lam.matrix.min() >= 0.1
    monkeypatch.setenv("MOWSP_SEED", "9")
    assert run("gen-lambdas", "-K", 4, "-W", 3, "-o", files / "a.txt") == 0
    assert run("gen-lambdas", "-K", 4, "-W", 3, "--seed", 9, "-o", files / "b.txt") == 0
    assert (files / "a.txt").read_text() == (files / "b.txt").read_text()
    monkeypatch.delenv("MOWSP_SEED")
    assert run("gen-lambdas", "-K", 4, "-W", 3, "-o", files / "c.txt") == 0
    assert (files / "a.txt").read_text() != (files / "c.txt").read_text()


def test_geojson_and_diagnostics(files, capsys):
    run("solve", "-g", files / "g.txt", "-l", files / "l.txt", "-o", files / "s.json")
    assert run("export-geojson", "-g", files / "g.txt", "-S", files / "s.json", "-t", "2",
               "-o", files / "r.geojson") == 0
    gj = json.loads((files / "r.geojson").read_text())
    assert len(gj["features"]) == 3
    capsys.readouterr()
    assert run("diagnostics", "-g", files / "g.txt") == 0
    d = json.loads(capsys.readouterr().out)
    assert d["pareto_count"] == [1, 2, 2] and d["L"] == 2


def test_synth_geo(tmp_path):
    from mowsp import random_tagged_graph
    write_graph(random_tagged_graph(10, 30, seed=1), tmp_path / "t.txt")
    assert run("synth-geo", "-g", tmp_path / "t.txt", "-o", tmp_path / "geo.txt") == 0
    assert read_graph(tmp_path / "geo.txt").W == 4
    assert run("synth-geo", "-g", tmp_path / "geo.txt", "-o", tmp_path / "x.txt") == 0
    write_graph(g1(), tmp_path / "plain.txt")
    assert run("synth-geo", "-g", tmp_path / "plain.txt", "-o", tmp_path / "x.txt") == 2


def test_bench_cli(tmp_path, capsys):
    assert run("bench", "--instances", 1, "-K", "1,2", "--reps", 1, "--regimes", "correlated",
               "-o", tmp_path / "b.csv") == 0
    assert "correlated" in capsys.readouterr().out
    assert run("bench", "--reps", 0, "-o", tmp_path / "b.csv") == 2
