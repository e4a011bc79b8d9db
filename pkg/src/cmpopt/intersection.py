"""Minimum-weight common independent set from set comparisons.

Augments along minimal shortest paths of the exchange graph.  For an
extreme Y the length of a minimal path P equals w(Y ^ P) - w(Y), and
Y ^ P is common independent, so path lengths can be compared by comparing
the sets Y ^ P themselves.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotCommonIndependent
from .matroids import Matroid
from .oracle import ComparisonOracle, HiddenWeights, PredicateFamily


@dataclass
class IntersectionExchangeGraph:
    Y: frozenset
    out_arcs: dict      # node -> set of successors
    X1: set
    X2: set

    def has_arc(self, a, b) -> bool:
        return b in self.out_arcs[a]


def build_intersection_graph(M1: Matroid, M2: Matroid, Y) -> IntersectionExchangeGraph:
    """(y, x) iff Y - y + x in I1, (x, y) iff Y - y + x in I2."""
    Y = frozenset(Y)
    if not (M1.is_independent(Y) and M2.is_independent(Y)):
        raise NotCommonIndependent(sorted(Y))
    n = M1.n
    out = {e: set() for e in range(n)}
    X1, X2 = set(), set()
    for x in range(n):
        if x in Y:
            continue
        if M1.is_independent(Y | {x}):
            X1.add(x)
        if M2.is_independent(Y | {x}):
            X2.add(x)
        for y in Y:
            Z = Y - {y} | {x}
            if M1.is_independent(Z):
                out[y].add(x)
            if M2.is_independent(Z):
                out[x].add(y)
    return IntersectionExchangeGraph(Y, out, X1, X2)


def _sym(Y: frozenset, path) -> frozenset:
    return Y.symmetric_difference(path)


def _common(M1, M2, S) -> bool:
    return M1.is_independent(S) and M2.is_independent(S)


class _PathOrder:
    """Orders paths by (length via oracle, arc count, terminal index)."""

    def __init__(self, oracle, Y):
        self.oracle, self.Y = oracle, Y

    def less(self, P, Q) -> bool:
        s = self.oracle.compare(_sym(self.Y, P), _sym(self.Y, Q))
        if s:
            return s < 0
        if len(P) != len(Q):
            return len(P) < len(Q)
        return P[-1] < Q[-1]


def modified_bellman_ford(M1: Matroid, M2: Matroid, H: IntersectionExchangeGraph, oracle):
    """Minimal shortest X1 -> X2 path with Y ^ P common independent, or None."""
    Y = H.Y
    order = _PathOrder(oracle, Y)
    ys = sorted(Y)
    xs = [x for x in range(M1.n) if x not in Y]
    # p[y]: best path (tuple of elements) from X1 ending at y, or None
    p = {}
    for y in ys:
        best = None
        for x in sorted(H.X1):
            if not H.has_arc(x, y):
                continue
            cand = (x, y)
            if not _common(M1, M2, _sym(Y, cand)):
                continue
            if best is None or order.less(cand, best):
                best = cand
        p[y] = best
    for _ in range(1, len(ys)):
        nxt = dict(p)
        for y in ys:
            best = p[y]
            for z in ys:
                pz = p[z]
                if pz is None or y in pz:
                    continue
                for x in xs:
                    if x in pz or not (H.has_arc(z, x) and H.has_arc(x, y)):
                        continue
                    cand = pz + (x, y)
                    if not _common(M1, M2, _sym(Y, cand)):
                        continue
                    if best is None or order.less(cand, best):
                        best = cand
            nxt[y] = best
        if nxt == p:
            break
        p = nxt
    # close into X2: single sources in X1 & X2, or p[y] + x
    best = None
    for x in sorted(H.X1 & H.X2):
        cand = (x,)
        if _common(M1, M2, _sym(Y, cand)) and (best is None or order.less(cand, best)):
            best = cand
    for y in ys:
        if p[y] is None:
            continue
        for x in sorted(H.X2):
            if x in p[y] or not H.has_arc(y, x):
                continue
            cand = p[y] + (x,)
            if _common(M1, M2, _sym(Y, cand)) and (best is None or order.less(cand, best)):
                best = cand
    return best


@dataclass
class IntersectionResult:
    best: frozenset
    extremes: list                      # Y_0, Y_1, ... in augmentation order
    queries_per_phase: list = field(default_factory=list)
    independence_calls: int = 0

    def to_dict(self) -> dict:
        return {"best": sorted(self.best), "extremes": [sorted(Y) for Y in self.extremes],
                "queries_per_phase": self.queries_per_phase,
                "independence_calls": self.independence_calls}


def min_weight_common_independent(M1: Matroid, M2: Matroid, oracle) -> IntersectionResult:
    Y = frozenset()
    extremes = [Y]
    phases = []
    calls0 = M1.indep_calls + M2.indep_calls
    while True:
        before = oracle.ledger.count_compare
        H = build_intersection_graph(M1, M2, Y)
        P = modified_bellman_ford(M1, M2, H, oracle)
        phases.append(oracle.ledger.count_compare - before)
        if P is None:
            break
        Y = _sym(Y, P)
        extremes.append(Y)
    before = oracle.ledger.count_compare
    best = extremes[0]
    for Z in extremes[1:]:
        if oracle.compare(Z, best) < 0:
            best = Z
    phases.append(oracle.ledger.count_compare - before)
    calls = M1.indep_calls + M2.indep_calls - calls0
    return IntersectionResult(best, extremes, phases, calls)


def common_oracle(M1: Matroid, M2: Matroid, weights) -> ComparisonOracle:
    fam = PredicateFamily(M1.n, lambda S: M1._indep(S) and M2._indep(S),
                          lambda: (S for S in M1.independent_sets() if M2._indep(S)))
    return ComparisonOracle(fam, HiddenWeights(tuple(weights)))


def bipartite_matroids(left: int, right: int, edges):
    """Edge i = (a, b): one partition matroid per side, capacity 1 per vertex."""
    from .matroids import PartitionMatroid
    n = len(edges)
    L = PartitionMatroid([[i for i, e in enumerate(edges) if e[0] == a] for a in range(left)],
                         [1] * left, n)
    R = PartitionMatroid([[i for i, e in enumerate(edges) if e[1] == b] for b in range(right)],
                         [1] * right, n)
    return L, R
