"""Shortest s-t paths when only whole s-t walks can be compared.

Bellman-Ford needs to rank walks s ~> v for a fixed v.  Appending one
fixed walk v ~> t to every candidate turns them into s-t walks whose
length differences are unchanged, so the oracle can rank them.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import Unreachable
from .oracle import COMPARE, QueryLedger, sign


class WalkOracle:
    """Answers sign(len(W1) - len(W2)) for s-t walks given as vertex sequences."""

    def __init__(self, n: int, edges, lengths, s: int, t: int, ledger: QueryLedger | None = None):
        self.n, self.s, self.t = n, s, t
        self.edges = [tuple(e) for e in edges]
        self._len = {}
        for e, w in zip(self.edges, lengths):
            w = Fraction(w)
            # parallel edges: a walk may use the cheapest copy
            self._len[e] = min(self._len.get(e, w), w)
        self.ledger = ledger if ledger is not None else QueryLedger(record=False)

    def validate(self, W) -> None:
        W = tuple(W)
        if not W or W[0] != self.s or W[-1] != self.t:
            raise ValueError(f"not an s-t walk: {W}")
        for a, b in zip(W, W[1:]):
            if (a, b) not in self._len:
                raise ValueError(f"walk uses missing edge {(a, b)}")

    def _length(self, W) -> Fraction:
        return sum((self._len[(a, b)] for a, b in zip(W, W[1:])), Fraction(0))

    def compare_walks(self, W1, W2) -> int:
        self.validate(W1)
        self.validate(W2)
        ans = sign(self._length(W1) - self._length(W2))
        self.ledger.log(COMPARE, tuple(W1), tuple(W2), ans)
        return ans

    def reveal(self) -> dict:
        return dict(self._len)


@dataclass
class PathResult:
    kind: str                   # "path" or "negative_cycle"
    walk: tuple                 # the s-t path, or the certifying s-t walk without the cycle
    cycle: tuple | None = None  # closed vertex sequence c, ..., c
    certified: bool = False
    comparisons: int = 0
    history: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "walk": list(self.walk),
                "cycle": list(self.cycle) if self.cycle else None,
                "certified": self.certified, "comparisons": self.comparisons}


def _reach(n, adj, src):
    seen = {src}
    dq = deque([src])
    while dq:
        v = dq.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                dq.append(w)
    return seen


def _to_target_walks(n, radj, t, keep) -> dict:
    """BFS tree into t: a fixed walk v ~> t for every kept vertex."""
    nxt = {t: None}
    dq = deque([t])
    while dq:
        v = dq.popleft()
        for u in sorted(radj[v]):
            if u in keep and u not in nxt:
                nxt[u] = v
                dq.append(u)
    walks = {}
    for v in keep:
        W = [v]
        while nxt[W[-1]] is not None:
            W.append(nxt[W[-1]])
        walks[v] = tuple(W)
    return walks


def _split_cycles(W) -> list:
    """Repeatedly cut out the first closed segment; returns (position, cycle) pairs."""
    W = list(W)
    cycles = []
    changed = True
    while changed:
        changed = False
        first = {}
        for i, v in enumerate(W):
            if v in first:
                j = first[v]
                cycles.append((W[:j + 1], tuple(W[j:i + 1])))
                W = W[:j] + W[i:]
                changed = True
                break
            first[v] = i
    return cycles


def shortest_path_walk_comparisons(n: int, edges, s: int, t: int, oracle: WalkOracle,
                                   keep_history: bool = False) -> PathResult:
    adj = [set() for _ in range(n)]
    radj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        radj[b].add(a)
    fwd = _reach(n, adj, s)
    if t not in fwd:
        raise Unreachable(f"{t} not reachable from {s}")
    keep = fwd & _reach(n, radj, t)
    tw = _to_target_walks(n, radj, t, keep)
    preds = {v: sorted(u for u in radj[v] if u in keep) for v in keep}
    verts = sorted(keep)
    start = oracle.ledger.count(COMPARE)

    table = {v: None for v in verts}
    table[s] = (s,)
    changed = {s}
    history = [dict(table)] if keep_history else []

    def better(cand, cur, v) -> bool:
        return oracle.compare_walks(cand + tw[v][1:], cur + tw[v][1:]) < 0

    improved_last = None
    for rnd in range(1, len(verts) + 1):
        new = dict(table)
        improved = []
        for v in verts:
            best = table[v]
            for u in preds[v]:
                if u not in changed or table[u] is None:
                    continue
                cand = table[u] + (v,)
                if cand == best:
                    continue
                if best is None or better(cand, best, v):
                    best = cand
            if best != table[v]:
                new[v] = best
                improved.append(v)
        table = new
        changed = set(improved)
        if keep_history:
            history.append(dict(table))
        if not improved:
            break
        if rnd == len(verts):
            improved_last = improved

    if improved_last is None:
        comps = oracle.ledger.count(COMPARE) - start
        return PathResult("path", table[t], None, False, comps, history)

    # some walk with |V| edges beat every shorter walk, so one of its cycles is negative
    for v in improved_last:
        for prefix, cyc in _split_cycles(table[v]):
            c = cyc[0]
            base = tuple(prefix) + tw[c][1:]
            looped = tuple(prefix) + cyc[1:] + tw[c][1:]
            if oracle.compare_walks(looped, base) < 0:
                comps = oracle.ledger.count(COMPARE) - start
                return PathResult("negative_cycle", base, cyc, True, comps, history)
    raise RuntimeError("improvement at the last round without a negative cycle")
