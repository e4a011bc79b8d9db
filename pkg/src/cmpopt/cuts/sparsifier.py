"""Cut sparsifier built from edge-strength estimates.

Level j works with guess kappa_j = n / 2^j on the graph contracted along
all edges whose strength was settled at earlier levels.  A q_j-percolation
of that graph is split by removing small cuts; inside each surviving piece
the edges are strong enough to be sampled at rate about 1/kappa_j, and the
piece is then contracted.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .graph import components, stoer_wagner
from .primitives import CutPrimitives
from .sampling import VertexPartition, sample_percolation


@dataclass
class SparsifierConfig:
    eps: float = 0.1
    strength_const: float = 4000.0  # q_j = min(strength_const * ln n / kappa_j, 1)
    strip_ratio: float = 0.8        # strip cuts of value <= strip_ratio * q_j * kappa_j
    seed: int | None = None

    def __post_init__(self):
        if not 0 < self.eps < 1:
            raise ValueError("eps must lie in (0, 1)")


@dataclass
class Sparsifier:
    n: int
    weights: dict = field(default_factory=dict)     # (u, v) -> weight in H
    strength: dict = field(default_factory=dict)    # (u, v) -> estimated strength
    levels: list = field(default_factory=list)      # per-level summary dicts
    exact: bool = False                             # every edge of G was learned with q = 1
    known_edges: set = field(default_factory=set)   # edges of G seen with certainty

    def cut_value(self, S) -> float:
        S = set(S)
        return sum(w for (u, v), w in self.weights.items() if (u in S) != (v in S))

    @property
    def m(self) -> int:
        return len(self.weights)


def _strip(pieces_in, sub_edges, threshold):
    """Split pieces along cuts of value <= threshold until none remain."""
    out = []
    stack = [list(p) for p in pieces_in]
    while stack:
        piece = stack.pop()
        if len(piece) < 2:
            out.append(piece)
            continue
        inside = set(piece)
        w = {e: c for e, c in sub_edges.items() if e[0] in inside and e[1] in inside}
        comps = components(piece, w)
        if len(comps) > 1:
            stack.extend(comps)
            continue
        val, side = stoer_wagner(0, w, piece)
        if val <= threshold:
            stack.append(sorted(side))
            stack.append(sorted(inside - side))
        else:
            out.append(piece)
    return out


def _quotient(partition: VertexPartition, edges) -> dict:
    """Multigraph on block indices as summed weights."""
    out = {}
    for u, v in edges:
        a, b = partition.block_of[u], partition.block_of[v]
        if a != b:
            key = (min(a, b), max(a, b))
            out[key] = out.get(key, 0) + 1
    return out


def build_sparsifier(prims: CutPrimitives, config: SparsifierConfig | None = None,
                     rng: random.Random | None = None) -> Sparsifier:
    config = config or SparsifierConfig()
    rng = rng or random.Random(config.seed)
    n = prims.oracle.n
    eps = config.eps
    H = Sparsifier(n)
    part = VertexPartition.trivial(n)
    cache = None  # all edges of G between current blocks, once learned with p = 1
    j = 0
    while part.n and len(part.blocks) > 1:
        kappa = n / 2 ** j
        q = min(config.strength_const * math.log(n) / kappa, 1.0)
        last = kappa <= 1
        if last:
            q = 1.0  # final level keeps every remaining edge
        if q >= 1.0 and cache is None:
            cache = sample_percolation(prims, part, 1.0, rng)
            H.known_edges |= cache
        if cache is not None:
            sampled = {e for e in cache if part.crosses(*e)}
        else:
            sampled = sample_percolation(prims, part, q, rng)
        quot = _quotient(part, sampled)
        threshold = -1 if last else config.strip_ratio * q * kappa
        pieces = _strip([list(range(len(part.blocks)))], quot, threshold)
        rate = min(2 * q / eps ** 2, 1.0)
        multi = [pc for pc in pieces if len(pc) > 1]
        n_new = 0
        for pc in multi:
            if cache is not None and rate >= 1.0:
                ids = set(pc)
                inner = {e for e in cache if part.crosses(*e)
                         and part.block_of[e[0]] in ids and part.block_of[e[1]] in ids}
            else:
                inner = sample_percolation(prims, part, rate, rng, blocks=pc)
            for e in inner:
                H.weights[e] = H.weights.get(e, 0) + 1 / rate
                H.strength[e] = kappa / 2
                n_new += 1
        H.levels.append({"j": j, "kappa": kappa, "q": q, "rate": rate,
                         "pieces": len(multi), "edges_added": n_new})
        if multi:
            part = part.merge(multi)
        if last:
            break
        j += 1
    # q only grows with j, so full learning at level 0 means H = G
    H.exact = bool(H.levels) and H.levels[0]["q"] >= 1.0
    return H
