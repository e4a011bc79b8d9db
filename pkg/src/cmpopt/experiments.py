"""Seeded experiment suites: solve, cross-check against brute force, tally queries."""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import apps
from .cuts.fixtures import (HEAVY_EDGE_ORDER, comparison_table, complete_graph, cut_order_holds,
                            empty_graph, heavy_edge_graph)
from .cuts.graph import gnp, mask_of, stoer_wagner
from .cuts.mincut import mincut_query_budget, min_cut
from .cuts.oracle import CutOracle
from .cuts.primitives import CutPrimitives
from .cuts.reconstruct import reconstruct_graph
from .cuts.sampling import sample_uniform_edges
from .cuts.sparsifier import SparsifierConfig, build_sparsifier
from .errors import ConfigError, Unidentifiable, Unreachable
from .geometry import boolean_conic_dim_bound
from .gsl import comparison_bound, gsl_run
from .intersection import bipartite_matroids, common_oracle, min_weight_common_independent
from .matroids import basis_oracle, min_weight_basis, random_graphic, random_linear
from .oracle import (ComparisonOracle, ExplicitFamily, HiddenWeights, PowerSetFamily,
                     brute_force_argmin, from_indicator, indicator)
from .paths import WalkOracle, shortest_path_walk_comparisons
from .separation import PowerSetSeparator
from .sieve import comparison_budget, sieve_optimize

SOLVERS = ("sieve", "gsl", "ksum", "subsetsum", "apb", "mincut", "reconstruct", "sample",
           "sparsify", "matroid-basis", "matroid-intersect", "stpath", "fixtures")

# stored regression constants for budget gates (measured / formula stays below these)
RECONSTRUCT_CONST = 4.0
SAMPLE_CONST = 8.0
MATROID_BASIS_CONST = 2.0
INTERSECT_CONST = 1.0


@dataclass
class ExperimentConfig:
    solver: str
    n: int | None = None        # None: each run draws n from the solver's default range
    B: int = 4                  # largest weight bound; each run draws its own from 1..B
    k: int = 2
    eps: float = 0.1
    p: float | None = None      # edge density; None mixes densities across runs
    equality: bool = False
    seed: int = 0
    reps: int = 10
    workers: int = 1
    out: str | None = None      # prefix for <out>.json and <out>.csv

    def validate(self) -> None:
        if self.solver not in SOLVERS:
            raise ConfigError(f"unknown solver {self.solver!r}")
        if self.reps < 0:
            raise ConfigError("reps must be >= 0")
        if self.n is not None and self.n < 1:
            raise ConfigError("n must be positive")
        if self.B < 1:
            raise ConfigError("B must be positive")
        if not 0 < self.eps < 1:
            raise ConfigError("eps must lie in (0, 1)")
        if self.p is not None and not 0 <= self.p <= 1:
            raise ConfigError("p must lie in [0, 1]")
        if self.k < 1:
            raise ConfigError("k must be positive")
        if self.workers < 1:
            raise ConfigError("workers must be positive")

    def run_seed(self, i: int) -> int:
        return self.seed * 1_000_003 + i


@dataclass
class RunReport:
    config: dict
    runs: list = field(default_factory=list)

    @property
    def aggregate(self) -> dict:
        if not self.runs:
            return {"runs": 0, "pass_rate": None, "max_queries": None, "mean_queries": None,
                    "max_budget_ratio": None, "budget_label": None}
        totals = [sum(r["queries"].values()) for r in self.runs]
        ratios = [r["budget_ratio"] for r in self.runs if r.get("budget_ratio") is not None]
        return {"runs": len(self.runs),
                "pass_rate": sum(1 for r in self.runs if r["correct"]) / len(self.runs),
                "max_queries": max(totals),
                "mean_queries": sum(totals) / len(totals),
                "max_budget_ratio": max(ratios) if ratios else None,
                "budget_label": self.runs[0].get("budget_label")}

    def to_dict(self, timing: bool = True) -> dict:
        runs = self.runs if timing else [{k: v for k, v in r.items() if k != "wall_time"}
                                         for r in self.runs]
        return {"config": self.config, "aggregate": self.aggregate, "runs": runs}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True, default=str)

    def to_csv(self) -> str:
        kinds = sorted({k for r in self.runs for k in r["queries"]})
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["seed", "n", "correct"] + kinds + ["budget_ratio"])
        for r in self.runs:
            w.writerow([r["seed"], r.get("n"), int(r["correct"])]
                       + [r["queries"].get(k, 0) for k in kinds] + [r.get("budget_ratio")])
        return buf.getvalue()

    def write(self, prefix: str) -> None:
        with open(prefix + ".json", "w") as fh:
            fh.write(self.to_json())
        with open(prefix + ".csv", "w") as fh:
            fh.write(self.to_csv())


def _pick_n(cfg, rng, lo, hi):
    return cfg.n if cfg.n is not None else rng.randint(lo, hi)


def _pick_B(cfg, rng):
    return rng.randint(1, cfg.B)


DENSITIES = (0.1, 0.2, 0.3, 0.5, 0.8)


def _pick_p(cfg, rng):
    return cfg.p if cfg.p is not None else rng.choice(DENSITIES)


def _result(n, correct, queries, used, budget, label, **extra) -> dict:
    out = {"n": n, "correct": bool(correct), "queries": dict(sorted(queries.items())),
           "budget_ratio": (used / budget) if budget else None, "budget_label": label}
    out.update(extra)
    return out


# -- instance generators -------------------------------------------------------

def boolean_family(n: int, rng: random.Random, size: int = 1000) -> list:
    """All of {0,1}^n for n <= 10, else `size` distinct random points."""
    if n <= 10:
        return [tuple(p) for p in itertools.product((0, 1), repeat=n)]
    seen = set()
    while len(seen) < min(size, 2 ** n):
        seen.add(tuple(rng.randint(0, 1) for _ in range(n)))
    return sorted(seen)


def random_digraph(n: int, rng: random.Random, negative: bool):
    p = min(1.0, rng.uniform(1.5, 4.0) / max(n, 1))
    edges = [(a, b) for a in range(n) for b in range(n) if a != b and rng.random() < p]
    lo = -3 if negative else 0
    lengths = [Fraction(rng.randint(lo, 20), rng.randint(1, 4)) for _ in edges]
    return edges, lengths


def bellman_ford_reference(n, edges, lengths, s, t):
    """Plain Bellman-Ford on known lengths restricted to vertices on s-t walks.

    Returns ("unreachable", None), ("negative_cycle", None) or ("path", distance).
    """
    fwd, bwd = {s}, {t}
    for _ in range(n):
        fwd |= {b for a, b in edges if a in fwd}
        bwd |= {a for a, b in edges if b in bwd}
    if t not in fwd:
        return "unreachable", None
    keep = fwd & bwd
    dist = {v: None for v in keep}
    dist[s] = Fraction(0)
    es = [(a, b, w) for (a, b), w in zip(edges, lengths) if a in keep and b in keep]
    for _ in range(len(keep) - 1):
        for a, b, w in es:
            if dist[a] is not None and (dist[b] is None or dist[a] + w < dist[b]):
                dist[b] = dist[a] + w
    for a, b, w in es:
        if dist[a] is not None and (dist[b] is None or dist[a] + w < dist[b]):
            return "negative_cycle", None
    return "path", dist[t]


# -- per-solver runs ---------------------------------------------------------------

def _run_sieve(cfg, rng):
    n = _pick_n(cfg, rng, 2, 16)
    pts = boolean_family(n, rng)
    fam = ExplicitFamily(n, [from_indicator(p) for p in pts])
    hw = HiddenWeights(tuple(rng.randint(-cfg.B, cfg.B) for _ in range(n)))
    oracle = ComparisonOracle(fam, hw)
    sets = [from_indicator(p) for p in pts]
    k = boolean_conic_dim_bound(n)
    best, stats = sieve_optimize(pts, lambda i, j: oracle.compare(sets[i], sets[j]), k, rng=rng)
    truth = brute_force_argmin(fam, hw)
    return _result(n, sets[best] == truth, oracle.ledger.snapshot(), stats.comparisons,
                   comparison_budget(k, len(pts)), "8 k log2(k) log2|P|", k=k, size=len(pts))


def _weight_ranks(family, hw):
    distinct = sorted({hw.weight(S) for S in family.enumerate()})
    return {S: distinct.index(hw.weight(S)) for S in family.enumerate()}


def _run_gsl(cfg, rng):
    n = _pick_n(cfg, rng, 1, 10)
    B = _pick_B(cfg, rng)
    fam = PowerSetFamily(n)
    hw = HiddenWeights.integer([rng.randint(-B, B) for _ in range(n)], B)
    oracle = ComparisonOracle(fam, hw)
    state = gsl_run(fam, oracle, PowerSetSeparator(n))
    ranks = _weight_ranks(fam, hw)
    ok = all(state.bucket_of(indicator(S, n)) is not None
             and state.rank_of(state.bucket_of(indicator(S, n))) == r for S, r in ranks.items())
    steps_ok = state.steps <= 2 * n * B + n
    budget = state.steps * comparison_bound(n, B)
    used = oracle.ledger.count_compare
    return _result(n, ok and steps_ok and used <= budget, oracle.ledger.snapshot(), used,
                   budget, "steps * ceil(log2(2nB+1))", steps=state.steps,
                   step_bound=2 * n * B + n, B=B)


def _run_ksum(cfg, rng):
    n = _pick_n(cfg, rng, cfg.k, 10)
    B = _pick_B(cfg, rng)
    k = min(cfg.k, n)
    vals = apps.random_values(n, B, rng)
    oracle = apps.ksum_oracle(vals, k, B)
    res = apps.ksum_decide(oracle, k, equality=cfg.equality, seed=rng.randrange(2 ** 30))
    truth = any(sum(vals[i] for i in c) == 0 for c in itertools.combinations(range(n), k))
    ok = res.answer == truth and (res.witness is None or sum(vals[i] for i in res.witness) == 0)
    if cfg.equality:
        used, budget, label = oracle.ledger.count_equality, apps.equality_bound_ksum(n, k, B), \
            f"{apps.EQ_CONST_KSUM} kB(n+kB)"
    else:
        used, budget, label = oracle.ledger.count_constant, apps.ksum_constant_bound(k, B), \
            "ceil(log2(2kB+1)) + 1 constant queries"
    return _result(n, ok, oracle.ledger.snapshot(), used, budget, label)


def _run_subsetsum(cfg, rng):
    n = _pick_n(cfg, rng, 1, 10)
    B = _pick_B(cfg, rng)
    vals = apps.random_values(n, B, rng)
    t = rng.randint(-n * B // 2, n * B // 2)
    oracle = apps.subsetsum_oracle(vals, B)
    res = apps.subsetsum_decide(oracle, t, equality=cfg.equality)
    truth = any(sum(vals[i] for i in c) == t
                for r in range(n + 1) for c in itertools.combinations(range(n), r))
    ok = res.answer == truth and (res.witness is None or sum(vals[i] for i in res.witness) == t)
    if cfg.equality:
        used, budget, label = oracle.ledger.count_equality, apps.equality_bound_subsetsum(n, B), \
            f"{apps.EQ_CONST_SUBSETSUM} n^2 B^2"
    else:
        used, budget, label = oracle.ledger.count_compare, apps.compare_bound_subsetsum(n, B), \
            f"{apps.CMP_CONST_SUBSETSUM} nB log2(nB+1)"
    return _result(n, ok, oracle.ledger.snapshot(), used, budget, label, target=t)


def _run_apb(cfg, rng):
    n = _pick_n(cfg, rng, 1, 10)
    B = _pick_B(cfg, rng)
    A = apps.random_values(n, B, rng)
    Bv = apps.random_values(n, B, rng)
    oracle = apps.apb_oracle(A, Bv, B)
    res = apps.apb_sort(oracle, equality=cfg.equality, seed=rng.randrange(2 ** 30))
    sums = {(i, j): A[i] + Bv[j] for i in range(n) for j in range(n)}
    ok = all(len({sums[p] for p in cls}) == 1 for cls in res.classes)
    ok = ok and len(res.classes) == len(set(sums.values()))
    if not cfg.equality:
        vals = [sums[cls[0]] for cls in res.classes]
        ok = ok and vals == sorted(vals)
        used, budget, label = oracle.ledger.count_compare, apps.compare_bound_apb(n, B), \
            f"{apps.CMP_CONST_APB} (n+2B) log2(2B+1)"
    else:
        used, budget, label = oracle.ledger.count_equality, apps.equality_bound_apb(n, B), \
            f"{apps.EQ_CONST_APB} B(n+B)"
    return _result(n, ok, oracle.ledger.snapshot(), used, budget, label)


def _true_min_cut(g) -> int:
    if g.n <= 12:
        return min(g.cut_value(m) for m in range(1, 1 << (g.n - 1)))
    return stoer_wagner(g.n, g.edges)[0]


def _run_mincut(cfg, rng):
    n = _pick_n(cfg, rng, 5, 64)
    p = _pick_p(cfg, rng)
    g = gnp(n, p, rng)
    oracle = CutOracle(g)
    res = min_cut(oracle, seed=rng.randrange(2 ** 30), eps=cfg.eps)
    ok = g.cut_value(mask_of(res.cut)) == _true_min_cut(g)
    return _result(n, ok, oracle.ledger.snapshot(), oracle.queries, mincut_query_budget(n),
                   "C n log2(n)^3", m=g.m, **{"value_rank_checks": res.value_rank_checks})


def _run_reconstruct(cfg, rng):
    n = _pick_n(cfg, rng, 4, 64)
    p = _pick_p(cfg, rng)
    g = gnp(n, p, rng)
    oracle = CutOracle(g)
    ok = reconstruct_graph(oracle) == g.edge_set()
    budget = RECONSTRUCT_CONST * min((g.m + n) * math.log2(n), n * n)
    return _result(n, ok, oracle.ledger.snapshot(), oracle.queries, budget,
                   "C min((m+n) log2 n, n^2)", m=g.m)


def _run_sample(cfg, rng):
    n = _pick_n(cfg, rng, 4, 40)
    p = _pick_p(cfg, rng)
    g = gnp(n, p, rng)
    k = min(cfg.k, g.m)
    oracle = CutOracle(g)
    if k < 1:
        return _result(n, True, oracle.ledger.snapshot(), 0, None, "C (n+k) log2(n)^2", m=0)
    res = sample_uniform_edges(CutPrimitives(oracle), k, rng)
    ok = len(set(res.edges)) == k and set(res.edges) <= g.edge_set()
    budget = SAMPLE_CONST * (n + k) * math.log2(n) ** 2
    return _result(n, ok, oracle.ledger.snapshot(), oracle.queries, budget,
                   "C (n+k) log2(n)^2", m=g.m, failure_bound=res.failure_bound)


def _run_sparsify(cfg, rng):
    n = _pick_n(cfg, rng, 8, 64)
    p = _pick_p(cfg, rng)
    g = gnp(n, p, rng)
    oracle = CutOracle(g)
    H = build_sparsifier(CutPrimitives(oracle), SparsifierConfig(eps=cfg.eps), rng)
    worst = 0.0
    for _ in range(50):
        S = [v for v in range(n) if rng.random() < 0.5]
        if not 0 < len(S) < n:
            continue
        true = g.cut_value(mask_of(S))
        if true:
            worst = max(worst, abs(H.cut_value(S) / true - 1))
    budget = n * math.log2(n) / cfg.eps ** 2
    return _result(n, worst <= 1.5 * cfg.eps, oracle.ledger.snapshot(), H.m, budget,
                   "edges(H) / (n log2 n / eps^2)", worst_cut_error=worst, exact=H.exact)


def _run_matroid_basis(cfg, rng):
    n = _pick_n(cfg, rng, 2, 12)
    M = random_graphic(rng.randint(2, 7), n, rng) if rng.random() < 0.5 else \
        random_linear(rng.randint(1, min(4, n)), n, 3, rng)
    w = [rng.randint(-9, 9) for _ in range(n)]
    oracle = basis_oracle(M, w)
    B = min_weight_basis(M, oracle)
    best = min(sum(w[e] for e in b) for b in M.bases())
    ok = M.is_basis(B) and sum(w[e] for e in B) == best
    budget = MATROID_BASIS_CONST * n * max(math.log2(n), 1)
    return _result(n, ok, oracle.ledger.snapshot(), oracle.ledger.count_compare, budget,
                   "C n log2 n", kind=M.kind, independence_calls=M.indep_calls)


def _run_matroid_intersect(cfg, rng):
    a, b = rng.randint(1, 4), rng.randint(1, 4)
    pairs = [(u, v) for u in range(a) for v in range(b)]
    n = min(len(pairs), _pick_n(cfg, rng, 1, 10))
    edges = rng.sample(pairs, n)
    w = [rng.randint(-9, 9) for _ in range(n)]
    M1, M2 = bipartite_matroids(a, b, edges)
    oracle = common_oracle(M1, M2, w)
    res = min_weight_common_independent(M1, M2, oracle)
    W = lambda S: sum(w[e] for e in S)
    allc = list(oracle.family.enumerate())
    ok = W(res.best) == min(W(S) for S in allc)
    ok = ok and all(W(Y) == min(W(S) for S in allc if len(S) == t)
                    for t, Y in enumerate(res.extremes))
    budget = INTERSECT_CONST * n ** 4
    return _result(n, ok, oracle.ledger.snapshot(), oracle.ledger.count_compare, budget,
                   "C n^4", queries_per_phase=res.queries_per_phase)


def _run_stpath(cfg, rng):
    n = _pick_n(cfg, rng, 2, 32)
    edges, lengths = random_digraph(n, rng, negative=rng.random() < 0.4)
    s, t = 0, n - 1
    kind, dist = bellman_ford_reference(n, edges, lengths, s, t)
    oracle = WalkOracle(n, edges, lengths, s, t)
    try:
        res = shortest_path_walk_comparisons(n, edges, s, t, oracle)
    except Unreachable:
        return _result(n, kind == "unreachable", oracle.ledger.snapshot(), 0, None, "C n^3",
                       outcome="unreachable")
    L = oracle.reveal()
    if res.kind == "path":
        ok = kind == "path" and sum(L[(a, b)] for a, b in zip(res.walk, res.walk[1:])) == dist
    else:
        cyc = sum(L[(a, b)] for a, b in zip(res.cycle, res.cycle[1:]))
        ok = kind == "negative_cycle" and cyc < 0 and res.certified
    used = oracle.ledger.count_compare
    return _result(n, ok, oracle.ledger.snapshot(), used, n ** 3, "C n^3", outcome=res.kind)


def table_fixture_heavy_edge() -> bool:
    """Both heavy-edge universes give the same strict cut order."""
    return cut_order_holds(heavy_edge_graph(1)) and cut_order_holds(heavy_edge_graph(2))


def indistinguishability_fixture() -> bool:
    """K3 and its complement answer every nontrivial comparison with 0, and so do K2s."""
    ok = comparison_table(complete_graph(3)) == comparison_table(empty_graph(3))
    ok = ok and set(comparison_table(complete_graph(3)).values()) == {0}
    for g in (complete_graph(2), empty_graph(2), complete_graph(3), empty_graph(3)):
        try:
            reconstruct_graph(CutOracle(g))
            ok = False
        except Unidentifiable:
            pass
    return ok


def _run_fixtures(cfg, rng):
    perturbed = cut_order_holds(heavy_edge_graph(1, cd=60))
    ok = table_fixture_heavy_edge() and not perturbed and indistinguishability_fixture()
    return _result(4, ok, {}, 0, None, "fixture", heavy_edge_order=[list(s) for s in HEAVY_EDGE_ORDER])


_RUNNERS = {
    "sieve": _run_sieve, "gsl": _run_gsl, "ksum": _run_ksum, "subsetsum": _run_subsetsum,
    "apb": _run_apb, "mincut": _run_mincut, "reconstruct": _run_reconstruct,
    "sample": _run_sample, "sparsify": _run_sparsify, "matroid-basis": _run_matroid_basis,
    "matroid-intersect": _run_matroid_intersect, "stpath": _run_stpath, "fixtures": _run_fixtures,
}


def run_one(cfg: ExperimentConfig, i: int) -> dict:
    seed = cfg.run_seed(i)
    rng = random.Random(seed)
    t0 = time.perf_counter()
    out = _RUNNERS[cfg.solver](cfg, rng)
    out["seed"] = seed
    out["wall_time"] = time.perf_counter() - t0
    return out


def run_suite(cfg: ExperimentConfig) -> RunReport:
    cfg.validate()
    idx = range(cfg.reps)
    if cfg.workers > 1:
        with ThreadPoolExecutor(cfg.workers) as pool:
            runs = list(pool.map(lambda i: run_one(cfg, i), idx))
    else:
        runs = [run_one(cfg, i) for i in idx]
    runs.sort(key=lambda r: r["seed"])
    report = RunReport(asdict(cfg), runs)
    if cfg.out:
        report.write(cfg.out)
    return report
