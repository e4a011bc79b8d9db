"""Run every solver suite and write <outdir>/<solver>.json and .csv.

    python scripts/run_all_suites.py --reps 20 --outdir results
"""
import argparse
import json
import time
from pathlib import Path

from cmpopt.experiments import SOLVERS, ExperimentConfig, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--only", nargs="*", default=None, help="subset of solvers")
    args = ap.parse_args()

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for name in args.only or SOLVERS:
        t0 = time.perf_counter()
        rep = run_suite(ExperimentConfig(name, reps=args.reps, seed=args.seed, out=str(out / name)))
        summary[name] = dict(rep.aggregate, seconds=round(time.perf_counter() - t0, 2))
        a = summary[name]
        print(f"{name:18s} runs={a['runs']:4d} pass={a['pass_rate']} "
              f"max_ratio={a['max_budget_ratio']} {a['seconds']}s", flush=True)
    (out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
