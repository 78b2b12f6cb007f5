import io
import json

import pytest

from mltalgo.cli import main
from mltalgo.generators import complete, octahedron
from mltalgo.graph_core import render_graph

__author__ = "Wai-Shing Luk"
__copyright__ = "Wai-Shing Luk"
__license__ = "MIT"


def _write(tmp_path, name, G):
    path = tmp_path / name
    path.write_text(render_graph(G))
    return str(path)


def _stdin(monkeypatch, text):
    monkeypatch.setattr("sys.stdin", io.StringIO(text))


def test_gen_then_bounds(tmp_path, capsys):
    out = str(tmp_path / "grid.txt")
    assert main(["gen", "grid", "3", "3", "-o", out]) == 0
    assert main(["bounds", out]) == 0
    report = json.loads(capsys.readouterr().out)
    assert (report["lower"], report["upper"], report["exact"]) == (3, 3, 3)


def test_gen_to_stdout_piped(monkeypatch, capsys):
    assert main(["gen", "grid", "3", "3"]) == 0
    text = capsys.readouterr().out
    assert text.splitlines()[0] == "9"
    _stdin(monkeypatch, text)
    assert main(["bounds", "-"]) == 0
    assert json.loads(capsys.readouterr().out)["exact"] == 3


def test_rank_octahedron(monkeypatch, capsys):
    _stdin(monkeypatch, render_graph(octahedron()))
    assert main(["rank", "-"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["invariant"] == "rank"
    assert report["exact"] == 4


def test_smt_and_wmlt(tmp_path, capsys):
    path = _write(tmp_path, "k4.txt", complete(4))
    assert main(["smt", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["invariant"] == "smt"
    assert report["exact"] == 4
    assert main(["wmlt", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert (report["lower"], report["upper"]) == (3, 4)


def test_text_format(tmp_path, capsys):
    path = _write(tmp_path, "oct.txt", octahedron())
    assert main(["bounds", path, "--format", "text"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:3] == ["mlt.lower 3", "mlt.upper 4", "mlt.exact -"]


def test_sme_exists(tmp_path, capsys):
    path = _write(tmp_path, "k4.txt", complete(4))
    assert main(["sme", "exists", path, "--data", "random:3"]) == 1
    assert "SME does not exist for n = 3" in capsys.readouterr().err
    assert main(["sme", "exists", path, "--data", "random:4"]) == 0
    assert json.loads(capsys.readouterr().out) == {"exists": True, "n": 4}


def test_sme_solve_from_csv(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    graph.write_text("2\n")
    data = tmp_path / "data.csv"
    data.write_text("2,0\n0,4\n")
    assert main(["sme", "solve", str(graph), "--data", str(data)]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["K"] == [[0.25, 0.0], [0.0, 0.0625]]


def test_split(tmp_path, capsys):
    path = _write(tmp_path, "oct.txt", octahedron())
    assert main(["split", path, "--parts", "0,3,4", "1,2,5", "--targets", "2,2"]) == 0
    assert json.loads(capsys.readouterr().out)["bound"] == 4
    assert main(["split", path, "--parts", "0,3,4", "1,2,5", "--targets", "1,1"]) == 1
    assert "part 0" in capsys.readouterr().err
    assert main(["split", path]) == 0
    assert json.loads(capsys.readouterr().out)["bound"] == 4


def test_small_commands(tmp_path, capsys):
    path = _write(tmp_path, "k4.txt", complete(4))
    assert main(["core", path, "--n", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["empty"]
    assert main(["pebble", path, "--k", "2", "--l", "3"]) == 0
    assert not json.loads(capsys.readouterr().out)["independent"]
    assert main(["conjecture-lf", path, "--n", "4"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["actual"] and not result["counterexample"]


def test_birank(tmp_path, capsys):
    path = _write(tmp_path, "oct.txt", octahedron())
    args = ["birank", path, "--left", "0,3,4", "--right", "1,2,5", "--r1", "2", "--r2", "2"]
    assert main(args) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["member"]
    assert result["method"] == "core"
    assert result["num_edges"] == 8


def test_seed_from_environment(tmp_path, monkeypatch, capsys):
    path = _write(tmp_path, "oct.txt", octahedron())
    assert main(["rank", path, "--seed", "7"]) == 0
    explicit = capsys.readouterr().out
    monkeypatch.setenv("MLT_SEED", "7")
    assert main(["rank", path]) == 0
    assert capsys.readouterr().out == explicit


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n1 1\n")
    assert main(["bounds", str(bad)]) == 2
    assert "self-loop" in capsys.readouterr().err
    assert main(["bounds", str(tmp_path / "missing.txt")]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["gen", "grid", "3"]) == 2
