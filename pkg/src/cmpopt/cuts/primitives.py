"""Neighborhood primitives from cut comparisons.

Everything rests on one identity: for u outside S,
    |dS| - |d(S+u)| = 2|d(u, S)| - deg(u),
so the query (S, S+u) reports whether more than half of u's edges enter S.
Walking a nested chain of sets and watching that sign flip pins down
individual neighbors.
"""
from __future__ import annotations

import math

from ..errors import IsolatedVertex, NoSignChange, TooFewVertices, TrivialCut
from .graph import mask_of, members


def majority_test(oracle, u: int, S) -> int:
    """+1 if most of u's edges go into S, 0 if exactly half, -1 otherwise."""
    S = S if isinstance(S, int) else mask_of(S)
    bit = 1 << u
    if S & bit:
        raise ValueError("S must not contain u")
    if S == 0 or (S | bit) == oracle.full:
        raise TrivialCut("majority test needs S nonempty and S + u proper")
    return oracle.compare_cuts(S, S | bit)


def _sign_at(oracle, u: int, S: int) -> int:
    """majority_test with the two trivial endpoints filled in for non-isolated u.

    The empty set holds none of u's edges (-1) and V - u holds all of them (+1).
    """
    if S == 0:
        return -1
    if (S | (1 << u)) == oracle.full:
        return 1
    return oracle.compare_cuts(S, S | (1 << u))


def tipping_point(oracle, u: int, S0, seq, s0: int | None = None, st: int | None = None):
    """Return (i, v_i): the first step of the chain S0 + v_1 + ... + v_i where the sign rises.

    Only the endpoint signs that are not supplied are queried, then a binary
    search spends ceil(log2 t) more queries.
    """
    S0 = S0 if isinstance(S0, int) else mask_of(S0)
    t = len(seq)
    if t == 0:
        raise NoSignChange("empty chain")
    prefix = [S0]
    for v in seq:
        prefix.append(prefix[-1] | (1 << v))
    if prefix[-1] | (1 << u) == oracle.full and st is None:
        raise TrivialCut("chain must stop short of V - u")
    if s0 is None:
        s0 = majority_test(oracle, u, S0)
    if st is None:
        st = majority_test(oracle, u, prefix[-1])
    if st <= s0:
        raise NoSignChange(f"signs {s0} -> {st}")
    lo, hi = 0, t
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _sign_at(oracle, u, prefix[mid]) > s0:
            hi = mid
        else:
            lo = mid
    return hi, seq[hi - 1]


def is_isolated(oracle, u: int) -> bool:
    """Three equal-cut tests on {v}, {w}, {v, w} against the same sets plus u."""
    if oracle.n < 4:
        raise TooFewVertices("isolation test needs n >= 4")
    v, w = [x for x in range(oracle.n) if x != u][:2]
    bu, bv, bw = 1 << u, 1 << v, 1 << w
    a = oracle.compare_cuts(bv, bv | bu)
    b = oracle.compare_cuts(bw, bw | bu)
    c = oracle.compare_cuts(bv | bw, bv | bw | bu)
    return a == 0 and b == 0 and c == 0


def _prefix_median(oracle, u: int, order: list, m_first: int, m_last: int) -> int:
    """Prefix of `order` holding exactly ceil(deg/2) - 1 neighbors of u."""
    if m_first > 0:
        return 0  # order[0] is u's only neighbor
    if m_last > 0:
        return mask_of(order[:-1])  # order[-1] is u's only neighbor
    if m_first == 0:
        return 0  # deg 2 and order[0] is a neighbor
    # sign({order[0]}) = -1, and sign(order[:-1]) >= 0 because m_last <= 0
    L = [0]
    for v in order:
        L.append(L[-1] | (1 << v))
    lo, hi = 1, len(order) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _sign_at(oracle, u, L[mid]) >= 0:
            hi = mid
        else:
            lo = mid
    return L[lo]


def median_sets(oracle, u: int, order=None, check_isolated: bool = True):
    """Disjoint (prefix, suffix) masks of `order`, each with ceil(deg(u)/2) - 1 neighbors."""
    if oracle.n < 4:
        raise TooFewVertices("median sets need n >= 4")
    if check_isolated and is_isolated(oracle, u):
        raise IsolatedVertex(u)
    order = [v for v in range(oracle.n) if v != u] if order is None else list(order)
    if sorted(order) != [v for v in range(oracle.n) if v != u]:
        raise ValueError("order must list every vertex except u")
    m_first = majority_test(oracle, u, 1 << order[0])
    m_last = majority_test(oracle, u, 1 << order[-1])
    minus = _prefix_median(oracle, u, order, m_first, m_last)
    plus = _prefix_median(oracle, u, order[::-1], m_last, m_first)
    return minus, plus


def suffix_median(oracle, u: int, order: list) -> int:
    m_first = majority_test(oracle, u, 1 << order[0])
    m_last = majority_test(oracle, u, 1 << order[-1])
    return _prefix_median(oracle, u, order[::-1], m_last, m_first)


def neighbors_in_set(oracle, u: int, A, medians=None, isolated: bool | None = None) -> set:
    """Exact N(u) & A with one query per candidate plus the median overhead."""
    A = [v for v in (members(A) if isinstance(A, int) else A) if v != u]
    if isolated is None:
        isolated = is_isolated(oracle, u)
    if isolated:
        return set()
    if not A:
        return set()
    minus, plus = medians if medians is not None else median_sets(oracle, u, check_isolated=False)
    found = set()
    for v in A:
        S = plus if not (plus >> v & 1) else minus
        if _sign_at(oracle, u, S | (1 << v)) >= 0:
            found.add(v)
    return found


def first_neighbor(oracle, u: int, T, isolated: bool | None = None):
    """First vertex of the ordered list T adjacent to u, or None.

    Uses the suffix median S of the ordering (T, rest).  T minus S is a
    prefix of T that holds a neighbor whenever T does, so one test at S + T
    decides emptiness and a binary search along S + v_1 + ... + v_i finds
    the first neighbor.
    """
    T = [v for v in T if v != u]
    if not T:
        return None
    if isolated is None:
        isolated = is_isolated(oracle, u)
    if isolated:
        return None
    inT = set(T)
    order = T + [v for v in range(oracle.n) if v != u and v not in inT]
    S = suffix_median(oracle, u, order)
    head = [v for v in T if not (S >> v & 1)]
    if not head:
        return None
    full_chain = S | mask_of(head)
    if _sign_at(oracle, u, full_chain) < 0:
        return None
    _, v = _chain_search(oracle, u, S, head, 0, len(head))
    return v


def _chain_search(oracle, u, S, seq, lo, hi):
    """Smallest i in (lo, hi] with sign(S + seq[:i]) >= 0, given it holds at hi and fails at lo."""
    prefix_cache = {}

    def mask_at(i):
        if i not in prefix_cache:
            prefix_cache[i] = S | mask_of(seq[:i])
        return prefix_cache[i]

    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _sign_at(oracle, u, mask_at(mid)) >= 0:
            hi = mid
        else:
            lo = mid
    return hi, seq[hi - 1]


def _extract_from(oracle, u, S, part, k, out):
    """Neighbors of u in `part` (disjoint from median S), in order, up to k."""
    rest = list(part)
    while rest and len(out) < k:
        # doubling search for the first prefix reaching the majority threshold
        step, prev, hit = 1, 0, None
        while True:
            j = min(step, len(rest))
            if _sign_at(oracle, u, S | mask_of(rest[:j])) >= 0:
                hit = j
                break
            if j == len(rest):
                break
            prev, step = j, step * 2
        if hit is None:
            return
        j, v = _chain_search(oracle, u, S, rest, prev, hit)
        out.append(v)
        rest = rest[j:]


def extract_edges(oracle, u: int, T, k: int | None = None, medians=None,
                  isolated: bool | None = None) -> list:
    """Up to k neighbors of u inside T, found by repeated first-neighbor searches.

    T is split by the two median sets so each piece has a median set
    disjoint from it; within a piece the median stays fixed while found
    prefixes are dropped.
    """
    T = [v for v in (members(T) if isinstance(T, int) else T) if v != u]
    k = len(T) if k is None else k
    if not T or k <= 0:
        return []
    if isolated is None:
        isolated = is_isolated(oracle, u)
    if isolated:
        return []
    minus, plus = medians if medians is not None else median_sets(oracle, u, check_isolated=False)
    in_plus = [v for v in T if plus >> v & 1]
    in_minus = [v for v in T if minus >> v & 1]
    middle = [v for v in T if not ((plus | minus) >> v & 1)]
    out: list = []
    for part, S in ((middle, minus), (in_plus, minus), (in_minus, plus)):
        if part:
            _extract_from(oracle, u, S, part, k, out)
        if len(out) >= k:
            break
    return out


class CutPrimitives:
    """Primitives bound to one oracle, caching per-vertex isolation and medians."""

    def __init__(self, oracle):
        if oracle.n < 4:
            raise TooFewVertices("primitives need n >= 4")
        self.oracle = oracle
        self._iso: dict = {}
        self._med: dict = {}

    def isolated(self, u: int) -> bool:
        if u not in self._iso:
            self._iso[u] = is_isolated(self.oracle, u)
        return self._iso[u]

    def medians(self, u: int):
        if u not in self._med:
            self._med[u] = median_sets(self.oracle, u, check_isolated=False)
        return self._med[u]

    def neighbors_in_set(self, u: int, A) -> set:
        if self.isolated(u):
            return set()
        return neighbors_in_set(self.oracle, u, A, medians=self.medians(u), isolated=False)

    def extract_edges(self, u: int, T, k: int | None = None) -> list:
        T = [v for v in (members(T) if isinstance(T, int) else T) if v != u]
        if not T or self.isolated(u):
            return []
        return extract_edges(self.oracle, u, T, k, medians=self.medians(u), isolated=False)


def log2n(n: int) -> int:
    return max(1, math.ceil(math.log2(max(n, 2))))
