import random

import pytest

from cmpopt.errors import ConfigError
from cmpopt.experiments import (ExperimentConfig, RunReport, boolean_family,
                                indistinguishability_fixture, run_one, run_suite,
                                table_fixture_heavy_edge)


def test_fixture_helpers():
    assert table_fixture_heavy_edge()
    assert indistinguishability_fixture()


@pytest.mark.parametrize("kw", [dict(solver="nope"), dict(reps=-1), dict(n=0), dict(B=0),
                                dict(eps=0.0), dict(eps=1.0), dict(p=1.5), dict(k=0),
                                dict(workers=0)])
def test_config_validation(kw):
    cfg = ExperimentConfig(**{"solver": "gsl", **kw})
    with pytest.raises(ConfigError):
        cfg.validate()


def test_runs_are_deterministic():
    cfg = ExperimentConfig("reconstruct", reps=3, seed=2)
    a = run_suite(cfg).to_dict(timing=False)
    b = run_suite(cfg).to_dict(timing=False)
    assert a == b


def test_workers_do_not_change_results():
    one = run_suite(ExperimentConfig("matroid-basis", reps=4, seed=1)).to_dict(timing=False)
    two = run_suite(ExperimentConfig("matroid-basis", reps=4, seed=1, workers=2)).to_dict(timing=False)
    assert one["runs"] == two["runs"]


def test_gsl_fixed_size_respects_step_bound():
    r = run_suite(ExperimentConfig("gsl", n=8, B=3, reps=5, seed=0))
    assert r.aggregate["pass_rate"] == 1.0
    for run in r.runs:
        assert run["steps"] <= 2 * 8 * run["B"] + 8


def test_mincut_fixed_size():
    r = run_suite(ExperimentConfig("mincut", n=32, reps=3, seed=0))
    assert r.aggregate["pass_rate"] == 1.0 and r.aggregate["max_budget_ratio"] <= 1


def test_run_one_records_seed():
    cfg = ExperimentConfig("subsetsum", seed=4)
    assert run_one(cfg, 2)["seed"] == cfg.run_seed(2)


def test_empty_report_aggregate():
    agg = RunReport({}, []).aggregate
    assert agg["runs"] == 0 and agg["pass_rate"] is None


def test_report_files(tmp_path):
    cfg = ExperimentConfig("stpath", reps=2, out=str(tmp_path / "sp"))
    run_suite(cfg)
    assert (tmp_path / "sp.json").read_text().startswith("{")
    assert (tmp_path / "sp.csv").read_text().count("\n") == 3


def test_boolean_family_sizes():
    rng = random.Random(0)
    assert len(boolean_family(3, rng)) == 8
    big = boolean_family(14, rng, size=200)
    assert len(big) == len(set(big)) == 200 and all(len(p) == 14 for p in big)
    assert len(boolean_family(10, rng)) == 1024
