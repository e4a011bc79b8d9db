"""k-SUM, SUBSET-SUM and sorting A+B through subspace learning."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .gsl import GslState, gsl_run, gsl_run_equality_only
from .oracle import (ComparisonOracle, ExplicitFamily, HiddenWeights,
                     KSubsetFamily, PowerSetFamily, from_indicator)
from .separation import LinearMatroid, PowerSetSeparator, gsl_matroid_separator

# measured multipliers for the closed-form query bounds (regression gates);
# worst ratios on the seeded corpus were 1.38, 3.0, 5.0, 1.33 and 2.08
EQ_CONST_KSUM = 2.0
EQ_CONST_SUBSETSUM = 4.0
EQ_CONST_APB = 6.0
CMP_CONST_SUBSETSUM = 2.0
CMP_CONST_APB = 3.0


@dataclass
class DecisionResult:
    answer: bool
    witness: frozenset | None
    queries: dict
    state: GslState | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {"answer": self.answer,
                "witness": sorted(self.witness) if self.witness is not None else None,
                "queries": {k: self.queries.get(k, 0) for k in ("compare", "equality", "constant")}}


def vandermonde(k: int, n: int) -> LinearMatroid:
    """Uniform matroid U(k, n): every k columns of a Vandermonde matrix are independent."""
    return LinearMatroid([[(j + 1) ** r for j in range(n)] for r in range(k)])


def partition_matroid_apb(n: int) -> LinearMatroid:
    """Elements 0..n-1 carry e1 (part A), n..2n-1 carry e2 (part B)."""
    return LinearMatroid([[1] * n + [0] * n, [0] * n + [1] * n])


def _search_constant(state: GslState, oracle, t):
    """Binary search t among ordered representatives using constant comparisons."""
    lo, hi = 0, len(state.order)
    while lo < hi:
        mid = (lo + hi) // 2
        rep = from_indicator(state.buckets[state.order[mid]].representative)
        s = oracle.compare_constant(rep, t)
        if s == 0:
            return rep
        if s > 0:
            hi = mid
        else:
            lo = mid + 1
    return None


def _scan_constant(state: GslState, oracle, t):
    for b in state.buckets:
        rep = from_indicator(b.representative)
        if oracle.equals_constant(rep, t):
            return rep
    return None


def _decide(family, oracle, separator, t, equality: bool) -> DecisionResult:
    if equality:
        state = gsl_run_equality_only(family, oracle, separator)
        rep = _scan_constant(state, oracle, t)
    else:
        state = gsl_run(family, oracle, separator)
        rep = _search_constant(state, oracle, t)
    return DecisionResult(rep is not None, rep, oracle.ledger.snapshot(), state)


def ksum_decide(oracle: ComparisonOracle, k: int, equality: bool = False, seed=None) -> DecisionResult:
    """Is there a k-set of weight 0?  Only k-set comparisons and constant queries are used."""
    n = oracle.n
    sep = gsl_matroid_separator(vandermonde(k, n), seed=seed)
    return _decide(oracle.family, oracle, sep, 0, equality)


def subsetsum_decide(oracle: ComparisonOracle, t, equality: bool = False) -> DecisionResult:
    return _decide(oracle.family, oracle, PowerSetSeparator(oracle.n), t, equality)


@dataclass
class ApbOrder:
    """Classes of (i, j) pairs in increasing order of a_i + b_j."""
    classes: list
    queries: dict
    state: GslState | None = field(default=None, repr=False)

    def rank_of(self) -> dict:
        return {pair: r for r, cls in enumerate(self.classes) for pair in cls}


def apb_family(n: int) -> ExplicitFamily:
    return ExplicitFamily(2 * n, [frozenset((i, n + j)) for i in range(n) for j in range(n)])


def apb_sort(oracle: ComparisonOracle, equality: bool = False, seed=None) -> ApbOrder:
    """Sort A+B using only {a, b} vs {a', b'} comparisons.

    In equality mode the classes are a partition listed in discovery order.
    """
    n = oracle.n // 2
    sep = gsl_matroid_separator(partition_matroid_apb(n), seed=seed)
    run = gsl_run_equality_only if equality else gsl_run
    state = run(oracle.family, oracle, sep)
    classes = [[] for _ in state.buckets]
    for i in range(n):
        for j in range(n):
            x = tuple(1 if e in (i, n + j) else 0 for e in range(2 * n))
            bid = state.bucket_of(x)
            if bid is None:
                raise RuntimeError("pair left unclassified")
            classes[state.rank_of(bid)].append((i, j))
    return ApbOrder(classes, oracle.ledger.snapshot(), state)


# -- instances and bounds -------------------------------------------------------

def ksum_oracle(values, k: int, B: int | None = None) -> ComparisonOracle:
    n = len(values)
    B = B if B is not None else max([abs(v) for v in values] + [1])
    return ComparisonOracle(KSubsetFamily(n, k), HiddenWeights.integer(values, B))


def subsetsum_oracle(values, B: int | None = None) -> ComparisonOracle:
    n = len(values)
    B = B if B is not None else max([abs(v) for v in values] + [1])
    return ComparisonOracle(PowerSetFamily(n), HiddenWeights.integer(values, B))


def apb_oracle(A, Bv, bound: int | None = None) -> ComparisonOracle:
    if len(A) != len(Bv):
        raise ValueError("A and B must have equal size")
    vals = list(A) + list(Bv)
    bound = bound if bound is not None else max([abs(v) for v in vals] + [1])
    return ComparisonOracle(apb_family(len(A)), HiddenWeights.integer(vals, bound))


def random_values(n: int, B: int, rng: random.Random) -> list:
    return [rng.randint(-B, B) for _ in range(n)]


def ksum_constant_bound(k: int, B: int) -> int:
    return math.ceil(math.log2(2 * k * B + 1)) + 1


def equality_bound_ksum(n: int, k: int, B: int) -> float:
    return EQ_CONST_KSUM * k * B * (n + k * B)


def equality_bound_subsetsum(n: int, B: int) -> float:
    return EQ_CONST_SUBSETSUM * n * n * B * B


def equality_bound_apb(n: int, B: int) -> float:
    return EQ_CONST_APB * B * (n + B)


def compare_bound_subsetsum(n: int, B: int) -> float:
    return CMP_CONST_SUBSETSUM * n * B * math.log2(n * B + 1)


def compare_bound_apb(n: int, B: int) -> float:
    return CMP_CONST_APB * (n + 2 * B) * math.log2(2 * B + 1)
