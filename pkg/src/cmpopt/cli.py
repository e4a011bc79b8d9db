"""Command line entry point.

Without an instance file every subcommand runs a seeded suite and prints the
aggregate; --out PREFIX also writes PREFIX.json (full report) and PREFIX.csv
(per-run query counts).  With --graph / --matroid / --points / --values the
subcommand solves that one instance and prints its JSON result instead.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import random
import sys
from pathlib import Path

from . import apps
from .errors import CmpOptError
from .experiments import SOLVERS, ExperimentConfig, run_suite
from .io import load_points, parse_digraph, parse_int_list

GRAPH_SOLVERS = ("mincut", "reconstruct", "sample", "sparsify")


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--n", type=int, default=None, help="instance size (default: drawn per run)")
    common.add_argument("--B", type=int, default=4, help="weight bound")
    common.add_argument("--eps", type=float, default=0.1)
    common.add_argument("--reps", type=int, default=10)
    common.add_argument("--out", default=None, help="prefix for .json and .csv outputs")
    common.add_argument("--k", type=int, default=None)
    common.add_argument("--p", type=float, default=None, help="edge density (default: mixed)")
    common.add_argument("--equality", action="store_true", help="equality-only oracle mode")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--no-timing", action="store_true", help="drop wall times from the JSON")

    ap = argparse.ArgumentParser(prog="cmpopt", description="Optimization from comparison queries.")
    sub = ap.add_subparsers(dest="solver", required=True)
    for name in SOLVERS:
        sp = sub.add_parser(name, parents=[common])
        if name in GRAPH_SOLVERS:
            sp.add_argument("--graph", help="'n m' then 'u v [w]' lines")
        if name == "stpath":
            sp.add_argument("--graph", help="'n m' then 'u v [len]' lines")
            sp.add_argument("--s", type=int, default=0)
            sp.add_argument("--t", type=int, default=None, help="target vertex (default n-1)")
        if name in ("ksum", "subsetsum", "apb"):
            sp.add_argument("--values", help="comma separated integers")
        if name == "subsetsum":
            sp.add_argument("--t", type=int, default=0, help="target sum")
        if name == "apb":
            sp.add_argument("--values-b", help="second list, same length as --values")
        if name in ("matroid-basis", "sieve"):
            sp.add_argument("--weights", help="comma separated hidden weights")
        if name == "matroid-basis":
            sp.add_argument("--matroid", help="matroid file")
        if name == "sieve":
            sp.add_argument("--points", help="'d N' then N lines of d rationals")
    return ap


def _instance_csv(queries: dict) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    kinds = sorted(queries)
    w.writerow(kinds)
    w.writerow([queries[k] for k in kinds])
    return buf.getvalue()


def _solve_instance(args) -> dict | None:
    """One-instance mode; None when no instance input was given."""
    rng = random.Random(args.seed)
    name = args.solver
    if name in GRAPH_SOLVERS and args.graph:
        from .cuts import (CutOracle, CutPrimitives, SparsifierConfig, build_sparsifier, min_cut,
                           reconstruct_graph, sample_uniform_edges)
        from .cuts.graph import HiddenGraph
        g = HiddenGraph.parse(Path(args.graph).read_text())
        oracle = CutOracle(g)
        if name == "mincut":
            return min_cut(oracle, seed=args.seed, eps=args.eps).to_dict()
        if name == "reconstruct":
            edges = reconstruct_graph(oracle)
            return {"edges": sorted(map(list, edges)), "queries": oracle.ledger.snapshot()}
        if name == "sample":
            res = sample_uniform_edges(CutPrimitives(oracle), args.k or 1, rng)
            return {"edges": [list(e) for e in res.edges], "rounds": res.rounds, "p": res.p,
                    "failure_bound": res.failure_bound, "queries": oracle.ledger.snapshot()}
        H = build_sparsifier(CutPrimitives(oracle), SparsifierConfig(eps=args.eps, seed=args.seed), rng)
        return {"edges": [[u, v, w] for (u, v), w in sorted(H.weights.items())],
                "exact": H.exact, "levels": H.levels, "queries": oracle.ledger.snapshot()}
    if name == "stpath" and args.graph:
        from .paths import WalkOracle, shortest_path_walk_comparisons
        n, edges, lengths = parse_digraph(Path(args.graph).read_text())
        t = n - 1 if args.t is None else args.t
        oracle = WalkOracle(n, edges, lengths, args.s, t)
        res = shortest_path_walk_comparisons(n, edges, args.s, t, oracle)
        return dict(res.to_dict(), queries=oracle.ledger.snapshot())
    if name in ("ksum", "subsetsum") and args.values:
        vals = parse_int_list(args.values)
        if name == "ksum":
            k = args.k or 3
            res = apps.ksum_decide(apps.ksum_oracle(vals, k), k, equality=args.equality, seed=args.seed)
        else:
            res = apps.subsetsum_decide(apps.subsetsum_oracle(vals), args.t, equality=args.equality)
        return res.to_dict()
    if name == "apb" and args.values:
        A = parse_int_list(args.values)
        Bv = parse_int_list(args.values_b or args.values)
        res = apps.apb_sort(apps.apb_oracle(A, Bv), equality=args.equality, seed=args.seed)
        return {"classes": [[list(p) for p in c] for c in res.classes], "queries": res.queries}
    if name == "matroid-basis" and args.matroid:
        from .matroids import basis_oracle, min_weight_basis, parse_matroid
        M = parse_matroid(Path(args.matroid).read_text())
        oracle = basis_oracle(M, parse_int_list(args.weights))
        B = min_weight_basis(M, oracle)
        return {"basis": sorted(B), "queries": oracle.ledger.snapshot(),
                "independence_calls": M.indep_calls}
    if name == "sieve" and args.points:
        from .geometry import boolean_conic_dim_bound
        from .oracle import HiddenWeights
        from .sieve import sieve_optimize
        pts = load_points(Path(args.points).read_text())
        hw = HiddenWeights(tuple(parse_int_list(args.weights)))
        k = args.k or boolean_conic_dim_bound(len(pts[0]))
        count = {"compare": 0}

        def cmp(i, j):
            count["compare"] += 1
            d = hw.dot(pts[i]) - hw.dot(pts[j])
            return (d > 0) - (d < 0)

        best, stats = sieve_optimize(pts, cmp, k, seed=args.seed)
        return {"argmin": best, "point": [str(c) for c in pts[best]],
                "iterations": stats.iterations, "queries": count}
    return None


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        result = _solve_instance(args)
        if result is not None:
            text = json.dumps(result, indent=2, sort_keys=True, default=str)
            print(text)
            if args.out:
                Path(args.out + ".json").write_text(text + "\n")
                Path(args.out + ".csv").write_text(_instance_csv(result.get("queries", {})))
            return 0
        cfg = ExperimentConfig(args.solver, n=args.n, B=args.B, k=args.k or 2, eps=args.eps, p=args.p,
                               equality=args.equality, seed=args.seed, reps=args.reps,
                               workers=args.workers, out=None)
        report = run_suite(cfg)
    except (CmpOptError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out + ".json").write_text(report.to_json(timing=not args.no_timing) + "\n")
        Path(args.out + ".csv").write_text(report.to_csv())
    print(json.dumps({"solver": args.solver, "aggregate": report.aggregate}, indent=2, sort_keys=True))
    rate = report.aggregate["pass_rate"]
    return 0 if rate is None or rate == 1.0 else 1


if __name__ == "__main__":
    sys.exit(main())
