"""Edge sampling of hidden (contracted) graphs through cut comparisons."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from ..errors import NotEnoughEdges
from .primitives import CutPrimitives


@dataclass
class VertexPartition:
    """Blocks of V standing for the vertices of a contracted graph."""

    blocks: list

    def __post_init__(self):
        self.blocks = [sorted(b) for b in self.blocks if b]
        self.block_of = {}
        for i, b in enumerate(self.blocks):
            for v in b:
                if v in self.block_of:
                    raise ValueError(f"vertex {v} in two blocks")
                self.block_of[v] = i
        n = len(self.block_of)
        if sorted(self.block_of) != list(range(n)):
            raise ValueError("blocks must partition range(n)")
        self.n = n

    @classmethod
    def trivial(cls, n: int) -> "VertexPartition":
        return cls([[v] for v in range(n)])

    def crosses(self, u: int, v: int) -> bool:
        return self.block_of[u] != self.block_of[v]

    def merge(self, groups) -> "VertexPartition":
        """Coarsen by merging each group of block indices into one block."""
        seen = set()
        out = []
        for g in groups:
            out.append([v for i in g for v in self.blocks[i]])
            seen.update(g)
        out.extend(b for i, b in enumerate(self.blocks) if i not in seen)
        return VertexPartition(out)


def sample_percolation(prims: CutPrimitives, partition: VertexPartition, p: float,
                       rng: random.Random, blocks=None) -> set:
    """Edges of G' (or G'[blocks]) kept independently with probability p.

    Every vertex u draws a q-sample of the vertices outside its own block,
    q = 1 - sqrt(1 - p), and extracts all its edges into that sample.  An
    edge survives unless both endpoints miss each other, which happens with
    probability (1 - q)^2 = 1 - p, independently across edges.
    """
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if p == 0:
        return set()
    q = 1.0 if p == 1 else 1 - math.sqrt(1 - p)
    allowed = range(partition.n) if blocks is None else \
        sorted(v for i in blocks for v in partition.blocks[i])
    allowed = list(allowed)
    out = set()
    for u in allowed:
        bu = partition.block_of[u]
        T = [v for v in allowed if partition.block_of[v] != bu and (q == 1.0 or rng.random() < q)]
        if not T:
            continue
        for v in prims.extract_edges(u, T):
            out.add((min(u, v), max(u, v)))
    return out


@dataclass
class UniformSample:
    edges: list
    rounds: int
    p: float
    failure_bound: float


def sample_uniform_edges(prims: CutPrimitives, k: int, rng: random.Random) -> UniformSample:
    """k distinct edges, uniform among all k-subsets of E.

    Percolates with p_t = 2^t / n^2 until at least k edges show up, then
    subsamples.  The percolated set is exchangeable at every stopping time,
    so the subsample is uniform.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = prims.oracle.n
    part = VertexPartition.trivial(n)
    t = 0
    while True:
        p = min(2 ** t / (n * n), 1.0)
        got = sample_percolation(prims, part, p, rng)
        if len(got) >= k:
            chosen = rng.sample(sorted(got), k)
            return UniformSample(chosen, t + 1, p, math.exp(-k / 4))
        if p >= 1.0:
            raise NotEnoughEdges(f"graph has {len(got)} edges, asked for {k}")
        t += 1
