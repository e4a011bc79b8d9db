"""Matroids behind an independence interface, and minimum-weight bases by comparisons.

Two bases differing in exactly {e, f} turn one weight comparison into
sign(w_e - w_f).  Such pairs exist precisely inside a connected component
and come from shortest paths in the basis exchange graph.
"""
from __future__ import annotations

import itertools
import random
from collections import deque

from .errors import DifferentComponents, NotAMatroid
from .lattice import rank
from .oracle import ComparisonOracle, HiddenWeights, PredicateFamily, as_set
from .sieve import merge_sort


class Matroid:
    """Ground set range(n); subclasses define _indep.  Independence calls are counted."""

    n: int
    kind = "abstract"

    def __init__(self):
        self.indep_calls = 0

    def is_independent(self, S) -> bool:
        self.indep_calls += 1
        return self._indep(as_set(S))

    def _indep(self, S: frozenset) -> bool:
        raise NotImplementedError

    def rank_of(self, S) -> int:
        I = set()
        for e in sorted(S):
            if self.is_independent(I | {e}):
                I.add(e)
        return len(I)

    def greedy_basis(self, order=None) -> frozenset:
        B = set()
        for e in (range(self.n) if order is None else order):
            if self.is_independent(B | {e}):
                B.add(e)
        return frozenset(B)

    @property
    def rank(self) -> int:
        return len(self.greedy_basis())

    def is_basis(self, S, r: int | None = None) -> bool:
        S = as_set(S)
        r = self.rank if r is None else r
        return len(S) == r and self.is_independent(S)

    def bases(self):
        r = self.rank
        for c in itertools.combinations(range(self.n), r):
            if self.is_independent(c):
                yield frozenset(c)

    def independent_sets(self):
        for k in range(self.n + 1):
            for c in itertools.combinations(range(self.n), k):
                if self.is_independent(c):
                    yield frozenset(c)


class FreeMatroid(Matroid):
    kind = "free"

    def __init__(self, n: int):
        super().__init__()
        self.n = n

    def _indep(self, S):
        return True

    def dump(self) -> str:
        return f"uniform {self.n} {self.n}\n"


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, k: int, n: int):
        super().__init__()
        self.k, self.n = k, n

    def _indep(self, S):
        return len(S) <= self.k

    def dump(self) -> str:
        return f"uniform {self.k} {self.n}\n"


class PartitionMatroid(Matroid):
    """At most caps[i] elements from blocks[i]; elements outside every block are loops."""
    kind = "partition"

    def __init__(self, blocks, caps, n: int | None = None):
        super().__init__()
        self.blocks = [list(b) for b in blocks]
        self.caps = list(caps)
        self.n = n if n is not None else 1 + max((e for b in self.blocks for e in b), default=-1)
        self.block_of = {e: i for i, b in enumerate(self.blocks) for e in b}

    def _indep(self, S):
        used = [0] * len(self.blocks)
        for e in S:
            i = self.block_of.get(e)
            if i is None:
                return False
            used[i] += 1
            if used[i] > self.caps[i]:
                return False
        return True

    def dump(self) -> str:
        lines = [f"partition {self.n}"]
        lines += [" ".join(map(str, [c] + b)) for b, c in zip(self.blocks, self.caps)]
        return "\n".join(lines) + "\n"


class GraphicMatroid(Matroid):
    """Edges of a multigraph; forests are independent."""
    kind = "graphic"

    def __init__(self, num_vertices: int, edges):
        super().__init__()
        self.num_vertices = num_vertices
        self.edges = [tuple(e) for e in edges]
        self.n = len(self.edges)

    def _indep(self, S):
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in S:
            u, v = self.edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def dump(self) -> str:
        lines = [f"graphic {self.num_vertices}"] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


class LinearMatroid(Matroid):
    """Column matroid of a rational matrix (any rank)."""
    kind = "linear"

    def __init__(self, V):
        super().__init__()
        self.V = [list(r) for r in V]
        self.n = len(self.V[0]) if self.V else 0

    def _indep(self, S):
        if not S:
            return True
        cols = [[row[j] for row in self.V] for j in sorted(S)]
        return rank(cols) == len(cols)

    def dump(self) -> str:
        return "linear\n" + "\n".join(" ".join(str(x) for x in r) for r in self.V) + "\n"


class DirectSum(Matroid):
    """Disjoint union; parts occupy consecutive ranges of the ground set."""
    kind = "sum"

    def __init__(self, parts):
        super().__init__()
        self.parts = list(parts)
        self.offsets = list(itertools.accumulate([0] + [p.n for p in self.parts]))
        self.n = self.offsets[-1]

    def _indep(self, S):
        for p, lo, hi in zip(self.parts, self.offsets, self.offsets[1:]):
            if not p._indep(frozenset(e - lo for e in S if lo <= e < hi)):
                return False
        return True


def parse_matroid(text: str) -> Matroid:
    rows = [ln.split() for ln in text.strip().splitlines() if ln.strip() and not ln.startswith("#")]
    head = rows[0]
    kind = head[0]
    if kind == "graphic":
        return GraphicMatroid(int(head[1]), [(int(a), int(b)) for a, b in rows[1:]])
    if kind == "linear":
        from fractions import Fraction
        return LinearMatroid([[Fraction(x) for x in r] for r in rows[1:]])
    if kind == "partition":
        n = int(head[1])
        return PartitionMatroid([[int(x) for x in r[1:]] for r in rows[1:]],
                                [int(r[0]) for r in rows[1:]], n)
    if kind == "uniform":
        return UniformMatroid(int(head[1]), int(head[2]))
    raise ValueError(f"unknown matroid kind {kind!r}")


# -- basis exchange graph ------------------------------------------------------

class BasisExchangeGraph:
    """Bipartite graph on B and U - B; {x, y} iff B + x - y is a basis."""

    def __init__(self, M: Matroid, B: frozenset):
        self.M, self.B = M, frozenset(B)
        self.adj = {e: set() for e in range(M.n)}
        r = len(self.B)
        for x in range(M.n):
            if x in self.B:
                continue
            if M.is_independent(self.B | {x}):
                raise NotAMatroid(f"B + {x} independent, so B was not a basis")
            for y in self.B:
                if M.is_basis(self.B - {y} | {x}, r):
                    self.adj[x].add(y)
                    self.adj[y].add(x)

    def components(self) -> list:
        seen, out = set(), []
        for s in range(self.M.n):
            if s in seen:
                continue
            comp, dq = [], deque([s])
            seen.add(s)
            while dq:
                v = dq.popleft()
                comp.append(v)
                for w in sorted(self.adj[v]):
                    if w not in seen:
                        seen.add(w)
                        dq.append(w)
            out.append(sorted(comp))
        return out

    def shortest_path(self, a: int, b: int) -> list:
        prev = {a: None}
        dq = deque([a])
        while dq:
            v = dq.popleft()
            if v == b:
                break
            for w in sorted(self.adj[v]):
                if w not in prev:
                    prev[w] = v
                    dq.append(w)
        if b not in prev:
            raise DifferentComponents(f"{a} and {b}")
        path = [b]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        return path[::-1]


def matroid_components(M: Matroid, B: frozenset | None = None):
    B = M.greedy_basis() if B is None else frozenset(B)
    H = BasisExchangeGraph(M, B)
    return H.components(), H


class ElementComparator:
    """sign(w_e - w_f) for elements of one component, one weight comparison each."""

    def __init__(self, M: Matroid, oracle, B0: frozenset | None = None):
        self.M, self.oracle = M, oracle
        self.B0 = M.greedy_basis() if B0 is None else frozenset(B0)
        self.r = len(self.B0)
        self._graphs = {}
        comps, H = matroid_components(M, self.B0)
        self._graphs[self.B0] = H
        self.components = comps
        self.comp_of = {e: i for i, c in enumerate(comps) for e in c}
        self.exchanges = []  # (Be, Bf) pairs actually compared

    def _graph(self, B):
        if B not in self._graphs:
            self._graphs[B] = BasisExchangeGraph(self.M, B)
        return self._graphs[B]

    def pair(self, e: int, f: int):
        """Bases (Be, Bf) with Be - Bf = {e} and Bf - Be = {f}."""
        B = self.B0
        if e not in B and f in B:
            Bf, Be = self.pair(f, e)
            return Be, Bf
        if e in B and f in B:
            path = self._graph(B).shortest_path(f, e)
            B = B - {f} | {path[1]}
        elif e not in B and f not in B:
            path = self._graph(B).shortest_path(e, f)
            B = B - {path[1]} | {e}
        # now e in B, f not in B; path alternates f = x0, y1, x1, ..., yk = e
        path = self._graph(B).shortest_path(f, e)
        xs, ys = path[0::2], path[1::2]
        Be = B - set(ys[:-1]) | set(xs[1:])
        Bf = B - set(ys) | set(xs)
        for S in (Be, Bf):
            if not self.M.is_basis(S, self.r):
                raise NotAMatroid(f"exchange along {path} did not give a basis")
        return frozenset(Be), frozenset(Bf)

    def compare(self, e: int, f: int) -> int:
        if e == f:
            return 0
        if self.comp_of[e] != self.comp_of[f]:
            raise DifferentComponents(f"{e} and {f}")
        Be, Bf = self.pair(e, f)
        self.exchanges.append((Be, Bf))
        return self.oracle.compare(Be, Bf)


def compare_elements(M: Matroid, oracle, e: int, f: int) -> int:
    return ElementComparator(M, oracle).compare(e, f)


def min_weight_basis(M: Matroid, oracle) -> frozenset:
    """Sort each component by exchange comparisons, then run greedy."""
    cmp = ElementComparator(M, oracle)
    B = set()
    for comp in cmp.components:
        for e in merge_sort(comp, cmp.compare):
            if M.is_independent(B | {e}):
                B.add(e)
    return frozenset(B)


def basis_oracle(M: Matroid, weights) -> ComparisonOracle:
    r = M.rank
    fam = PredicateFamily(M.n, lambda S: M._indep(S) and len(S) == r, lambda: M.bases())
    return ComparisonOracle(fam, HiddenWeights(tuple(weights)))


# -- generators for tests and experiments -------------------------------------------

def random_graphic(num_vertices: int, m: int, rng: random.Random) -> GraphicMatroid:
    return GraphicMatroid(num_vertices, [tuple(rng.sample(range(num_vertices), 2)) for _ in range(m)])


def random_linear(k: int, n: int, M: int, rng: random.Random) -> LinearMatroid:
    while True:
        V = [[rng.randint(-M, M) for _ in range(n)] for _ in range(k)]
        if rank(V) == k:
            return LinearMatroid(V)
