"""Hidden graphs over vertex bitmasks, plus small exact cut routines."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(x: int) -> int:
    return x.bit_count()


@dataclass
class HiddenGraph:
    """Simple undirected graph; weights default to 1 on every edge."""

    n: int
    edges: dict = field(default_factory=dict)  # (u, v) with u < v -> weight

    def __post_init__(self):
        clean = {}
        for (u, v), w in dict(self.edges).items():
            if u == v:
                raise ValueError("self-loop")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} out of range")
            if w < 0:
                raise ValueError("negative weight")
            key = (min(u, v), max(u, v))
            if key in clean:
                raise ValueError(f"duplicate edge {key}")
            if w:
                clean[key] = w
        self.edges = clean
        self.adj = [0] * self.n
        self.wadj = [dict() for _ in range(self.n)]
        for (u, v), w in clean.items():
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
            self.wadj[u][v] = w
            self.wadj[v][u] = w
        self.weighted = any(w != 1 for w in clean.values())
        self.full = (1 << self.n) - 1
        self._cut_cache: dict = {}

    @classmethod
    def from_edges(cls, n: int, edge_list, weights=None) -> "HiddenGraph":
        if weights is None:
            return cls(n, {(u, v): 1 for u, v in edge_list})
        return cls(n, {(u, v): w for (u, v), w in zip(edge_list, weights)})

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_set(self) -> set:
        return set(self.edges)

    def degree(self, u: int) -> int:
        return popcount(self.adj[u])

    def cut_value(self, S: int):
        """w(boundary of S) for a vertex bitmask S."""
        hit = self._cut_cache.get(S)
        if hit is not None:
            return hit
        out = ~S & self.full
        if not self.weighted:
            total = sum((self.adj[v] & out).bit_count() for v in members(S))
        else:
            total = 0
            for v in members(S):
                for u, w in self.wadj[v].items():
                    if out >> u & 1:
                        total += w
        if len(self._cut_cache) < 1 << 16:
            self._cut_cache[S] = total
        return total

    def cut_between(self, u: int, S: int) -> int:
        """Number of (unweighted) edges from u into S."""
        return popcount(self.adj[u] & S)

    def dump(self) -> str:
        lines = [f"{self.n} {self.m}"]
        for (u, v), w in sorted(self.edges.items()):
            lines.append(f"{u} {v}" if w == 1 else f"{u} {v} {w}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "HiddenGraph":
        rows = [ln.split() for ln in text.strip().splitlines() if ln.strip() and not ln.startswith("#")]
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = {}
        for r in rows[1:1 + m]:
            u, v = int(r[0]), int(r[1])
            w = int(r[2]) if len(r) > 2 else 1
            edges[(u, v)] = w
        if len(rows) - 1 < m:
            raise ValueError("fewer edge lines than declared")
        return cls(n, edges)


def gnp(n: int, p: float, rng: random.Random) -> HiddenGraph:
    return HiddenGraph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2)
                                      if rng.random() < p])


def weighted_gnp(n: int, p: float, B: int, rng: random.Random, low: int = 1) -> HiddenGraph:
    edges = {}
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges[(u, v)] = rng.randint(low, B)
    return HiddenGraph(n, edges)


def cycle(n: int) -> HiddenGraph:
    return HiddenGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> HiddenGraph:
    return HiddenGraph.from_edges(n, list(itertools.combinations(range(n), 2)))


# -- exact routines on known weighted graphs ----------------------------------------

def stoer_wagner(n: int, weights: dict, vertices=None):
    """Minimum cut of a known weighted graph as (value, side as a set).

    `weights` maps (u, v) to a nonnegative weight; `vertices` defaults to
    range(n).  Disconnected graphs give value 0.
    """
    verts = list(range(n)) if vertices is None else list(vertices)
    if len(verts) < 2:
        raise ValueError("need at least two vertices")
    W = {v: {} for v in verts}
    for (u, v), w in weights.items():
        if u == v or not w:
            continue
        W[u][v] = W[u].get(v, 0) + w
        W[v][u] = W[v].get(u, 0) + w
    groups = {v: {v} for v in verts}
    best_val, best_side = None, None
    active = list(verts)
    while len(active) > 1:
        start = active[0]
        conn = {v: W[start].get(v, 0) for v in active if v != start}
        order = [start]
        while conn:
            z = max(conn, key=conn.get)
            val = conn.pop(z)
            order.append(z)
            for y, w in W[z].items():
                if y in conn:
                    conn[y] += w
            last_val = val
        s, t = order[-2], order[-1]
        if best_val is None or last_val < best_val:
            best_val, best_side = last_val, set(groups[t])
        # merge t into s
        groups[s] |= groups.pop(t)
        for y, w in W.pop(t).items():
            if y == s:
                W[s].pop(t, None)
                continue
            W[y].pop(t, None)
            W[s][y] = W[s].get(y, 0) + w
            W[y][s] = W[y].get(s, 0) + w
        active.remove(t)
    return best_val, best_side


def components(vertices, weights: dict) -> list:
    """Connected components among `vertices` using edges with positive weight."""
    verts = list(vertices)
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v), w in weights.items():
        if w and u in parent and v in parent:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    groups = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())
