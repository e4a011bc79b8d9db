import csv
import json
import subprocess
import sys

import pytest

from cmpopt.cli import main
from cmpopt.cuts.graph import HiddenGraph, mask_of
from cmpopt.experiments import SOLVERS

CHEAP = ["sieve", "gsl", "subsetsum", "matroid-basis", "matroid-intersect", "stpath", "fixtures"]


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_thirteen_subcommands():
    assert len(SOLVERS) == 13


@pytest.mark.parametrize("solver", SOLVERS)
def test_zero_reps_exits_cleanly(solver, capsys):
    code, out = run([solver, "--reps", "0"], capsys)
    assert code == 0
    assert json.loads(out.out)["aggregate"]["runs"] == 0


@pytest.mark.parametrize("solver", CHEAP)
def test_suite_writes_json_and_csv(solver, tmp_path, capsys):
    prefix = str(tmp_path / solver)
    code, out = run([solver, "--reps", "2", "--seed", "1", "--n", "4", "--B", "2", "--eps", "0.2",
                     "--out", prefix], capsys)
    assert code == 0
    rep = json.loads((tmp_path / f"{solver}.json").read_text())
    assert rep["aggregate"]["runs"] == 2 and rep["config"]["seed"] == 1
    rows = list(csv.reader((tmp_path / f"{solver}.csv").open()))
    assert rows[0][:3] == ["seed", "n", "correct"] and len(rows) == 3


def test_no_timing_output_is_reproducible(tmp_path, capsys):
    texts = []
    for i in range(2):
        prefix = str(tmp_path / f"r{i}")
        run(["gsl", "--reps", "3", "--seed", "5", "--no-timing", "--out", prefix], capsys)
        texts.append((tmp_path / f"r{i}.json").read_bytes())
    assert texts[0] == texts[1]
    assert b"wall_time" not in texts[0]


def test_bad_config_is_an_error(capsys):
    code, out = run(["mincut", "--eps", "2"], capsys)
    assert code == 2 and "eps" in out.err


def test_instance_mode_graph(tmp_path, capsys):
    g = tmp_path / "c4.txt"
    g.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
    code, out = run(["reconstruct", "--graph", str(g)], capsys)
    assert code == 0 and json.loads(out.out)["edges"] == [[0, 1], [0, 3], [1, 2], [2, 3]]
    code, out = run(["mincut", "--graph", str(g), "--out", str(tmp_path / "mc")], capsys)
    side = json.loads(out.out)["cut"]
    assert code == 0 and 0 < len(side) < 4
    assert HiddenGraph.parse(g.read_text()).cut_value(mask_of(side)) == 2
    assert (tmp_path / "mc.json").exists() and (tmp_path / "mc.csv").exists()


def test_instance_mode_values(capsys):
    code, out = run(["subsetsum", "--values", "3,-1,5", "--t", "4"], capsys)
    assert code == 0 and json.loads(out.out)["answer"] is True
    code, out = run(["ksum", "--values", "1,2,4", "--k", "2"], capsys)
    assert code == 0 and json.loads(out.out)["answer"] is False


def test_instance_mode_paths_and_points(tmp_path, capsys):
    d = tmp_path / "d.txt"
    d.write_text("4 4\n0 1 1\n0 2 3\n1 3 5\n2 3 1\n")
    code, out = run(["stpath", "--graph", str(d)], capsys)
    assert code == 0 and json.loads(out.out)["walk"] == [0, 2, 3]
    p = tmp_path / "p.txt"
    p.write_text("3 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n")
    code, out = run(["sieve", "--points", str(p), "--weights", "2,-1,3"], capsys)
    assert code == 0 and json.loads(out.out)["argmin"] == 2


def test_instance_mode_matroid(tmp_path, capsys):
    m = tmp_path / "m.txt"
    m.write_text("graphic 3\n0 1\n1 2\n0 2\n")
    code, out = run(["matroid-basis", "--matroid", str(m), "--weights", "1,2,3"], capsys)
    assert code == 0 and json.loads(out.out)["basis"] == [0, 1]


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "cmpopt.cli", "fixtures", "--reps", "1"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["aggregate"]["pass_rate"] == 1.0
