"""Global minimum cut of a hidden graph from cut comparisons."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components, minimum_spanning_tree

from .graph import components, mask_of, members, stoer_wagner
from .primitives import CutPrimitives
from .sampling import VertexPartition, sample_percolation
from .sparsifier import SparsifierConfig, build_sparsifier

# regression gate: comparisons <= MINCUT_QUERY_CONST * n * log2(n)^3
MINCUT_QUERY_CONST = 2.0


@dataclass
class MinCutResult:
    cut: frozenset
    value: float | None                 # known when the winning cut's edges were learned
    value_rank_checks: int              # comparisons spent ranking candidate cuts
    queries: dict
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"cut": sorted(self.cut), "value": self.value,
                "value_rank_checks": self.value_rank_checks, "queries": self.queries}


def _canonical(mask: int, n: int) -> int:
    """The side not containing vertex n - 1."""
    full = (1 << n) - 1
    return mask ^ full if mask >> (n - 1) & 1 else mask


def contraction_repetitions(n: int, leaf: int, alpha: float) -> int:
    """Trials so a fixed alpha-approximate cut survives some trial w.p. >= 1 - 1/n^2.

    Such a cut survives random contraction down to `leaf` vertices with
    probability at least prod_{i > leaf} (1 - 2 alpha / i).
    """
    if n <= leaf:
        return 1
    p = 1.0
    for i in range(leaf + 1, n + 1):
        p *= max(1 - 2 * alpha / i, 1e-12)
    return math.ceil(2 * math.log(n) / p)


def near_min_cuts(n: int, weights: dict, bound: float, rng: np.random.Generator,
                  leaf: int = 10, alpha: float = 1.3, reps: int | None = None) -> set:
    """Canonical masks of cuts with weight <= bound, found by random contraction.

    Each trial contracts in the order of exponential keys (weight-proportional
    edge choice), i.e. Kruskal on the keys, stopping at `leaf` supervertices;
    every cut of the leaf graph is then checked exactly.
    """
    es = [(u, v, w) for (u, v), w in weights.items() if w > 0]
    found = set()
    if not es:
        return found
    U = np.array([e[0] for e in es])
    V = np.array([e[1] for e in es])
    W = np.array([float(e[2]) for e in es])
    L = min(leaf, n)
    reps = contraction_repetitions(n, L, alpha) if reps is None else reps
    sides = ((np.arange(1 << (L - 1))[:, None] >> np.arange(L - 1)) & 1).astype(float)
    sides = np.hstack([sides, np.zeros((sides.shape[0], 1))])[1:]  # label L-1 stays on side 0
    tol = bound * (1 + 1e-9) + 1e-9
    for _ in range(reps):
        keys = rng.exponential(size=len(W)) / W
        T = minimum_spanning_tree(coo_matrix((keys, (U, V)), shape=(n, n))).tocoo()
        order = np.argsort(T.data)
        keep = order[: max(n - L, 0)]
        forest = coo_matrix((np.ones(len(keep)), (T.row[keep], T.col[keep])), shape=(n, n))
        nc, lab = connected_components(forest, directed=False)
        if nc != L:
            continue  # the graph itself has more than L components
        Q = np.zeros((L, L))
        np.add.at(Q, (lab[U], lab[V]), W)
        Q = Q + Q.T
        vals = np.einsum("ij,jk,ik->i", sides, Q, 1 - sides)
        for idx in np.nonzero(vals <= tol)[0]:
            side = sides[idx]
            m = 0
            for v in range(n):
                if side[lab[v]]:
                    m |= 1 << v
            found.add(_canonical(m, n))
    return found


def _atoms(n: int, cuts) -> list:
    """Classes of vertices that no cut in `cuts` separates."""
    sig = {}
    cl = sorted(cuts)
    for v in range(n):
        key = tuple(c >> v & 1 for c in cl)
        sig.setdefault(key, []).append(v)
    return list(sig.values())


def _brute_min_cut(oracle) -> tuple:
    n = oracle.n
    best, checks = None, 0
    for m in range(1, 1 << (n - 1)):
        if best is None:
            best = m
            continue
        checks += 1
        if oracle.compare_cuts(m, best) < 0:
            best = m
    return best, checks


def min_cut(oracle, seed=None, eps: float = 0.1, leaf: int = 10, alpha: float = 1.3,
            sparsifier_config: SparsifierConfig | None = None) -> MinCutResult:
    """Exact minimum cut with high probability.

    Singleton cuts are ranked first; a sparsifier H then locates every
    near-minimum non-singleton cut, the vertices that no such cut separates
    are merged, and the remaining contracted graph is learned and solved
    exactly.  The best cut seen wins by comparison.
    """
    n = oracle.n
    if n < 2:
        raise ValueError("need at least two vertices")
    rng = random.Random(seed)
    if n <= 4:
        best, checks = _brute_min_cut(oracle)
        return MinCutResult(frozenset(members(best)), None, checks, oracle.ledger.snapshot())

    checks = 0
    best_single = 0
    for v in range(1, n):
        checks += 1
        if oracle.compare_cuts(1 << v, 1 << best_single) < 0:
            best_single = v

    prims = CutPrimitives(oracle)
    cfg = sparsifier_config or SparsifierConfig(eps=eps, seed=rng.randrange(2 ** 32))
    H = build_sparsifier(prims, cfg, rng)
    lam_H, _ = stoer_wagner(n, H.weights)
    comps = components(range(n), H.weights)
    np_rng = np.random.default_rng(rng.randrange(2 ** 32))
    if len(comps) > 1:
        # zero cuts are exactly the unions of components
        atoms = comps
        ncuts = len(comps)
    else:
        cuts = near_min_cuts(n, H.weights, (1 + 3 * cfg.eps) * lam_H, np_rng, leaf, alpha)
        cuts = {c for c in cuts if 1 < c.bit_count() < n - 1}
        atoms = _atoms(n, cuts) if cuts else [list(range(n))]
        ncuts = len(cuts)

    stats = {"sparsifier_edges": H.m, "sparsifier_exact": H.exact, "lambda_H": lam_H,
             "near_min_cuts": ncuts, "atoms": len(atoms)}
    best_mask, best_val = 1 << best_single, None
    if len(atoms) > 1:
        part = VertexPartition(atoms)
        if H.exact:
            learned = {e for e in H.known_edges if part.crosses(*e)}
        else:
            learned = sample_percolation(prims, part, 1.0, rng)
        quot = {}
        for u, v in learned:
            a, b = part.block_of[u], part.block_of[v]
            key = (min(a, b), max(a, b))
            quot[key] = quot.get(key, 0) + 1
        val, side = stoer_wagner(len(atoms), quot)
        cand = mask_of(v for i in side for v in part.blocks[i])
        stats["contracted_edges"] = len(learned)
        checks += 1
        if oracle.compare_cuts(cand, best_mask) < 0:
            best_mask, best_val = cand, val
        elif H.exact:
            best_val = sum(1 for u, v in H.known_edges if (best_mask >> u & 1) != (best_mask >> v & 1))
    elif H.exact:
        best_val = sum(1 for u, v in H.known_edges if (best_mask >> u & 1) != (best_mask >> v & 1))
    return MinCutResult(frozenset(members(best_mask)), best_val, checks,
                        oracle.ledger.snapshot(), stats)


def mincut_query_budget(n: int) -> float:
    return MINCUT_QUERY_CONST * n * max(math.log2(n), 1) ** 3


# -- stronger oracle: marginal comparisons ------------------------------------------

def ni_mincut_marginal(oracle) -> MinCutResult:
    """Maximum-adjacency phases driven by marginal comparisons.

    The next vertex maximizes w(u, S), equivalently minimizes
    w(d(S+u)) - w(du), which is exactly what a marginal comparison ranks.
    Phase cuts are compared with plain cut comparisons.
    """
    n = oracle.n
    if n < 2:
        raise ValueError("need at least two vertices")
    groups = [1 << v for v in range(n)]
    phase_cuts = []
    while len(groups) > 1:
        S = groups[0]
        rest = groups[1:]
        order = [0]
        while rest:
            if len(rest) == 1:
                pick = 0
            else:
                pick = 0
                for i in range(1, len(rest)):
                    a, b = rest[i], rest[pick]
                    if oracle.compare_marginals(S | a, a, S | b, b) < 0:
                        pick = i
            chosen = rest.pop(pick)
            order.append(chosen)
            S |= chosen
        # order holds masks now (first entry is index 0 of groups)
        seq = [groups[0]] + order[1:]
        last, prev = seq[-1], seq[-2]
        phase_cuts.append(last)
        merged = last | prev
        groups = [g for g in groups if g not in (last, prev)] + [merged]
        groups.sort(key=lambda g: (g & -g).bit_length())
    best, checks = phase_cuts[0], 0
    for c in phase_cuts[1:]:
        checks += 1
        if oracle.compare_cuts(c, best) < 0:
            best = c
    best = _canonical(best, n)
    return MinCutResult(frozenset(members(best)), None, checks, oracle.ledger.snapshot())
