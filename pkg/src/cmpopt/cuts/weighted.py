"""Weighted minimum cut when few distinct weighted degrees occur.

Within a class pair (V_i, V_j) of equal-degree vertices,
    w(uv) = (w(du) + w(dv) - w(d{u, v})) / 2
has the same first two terms for every pair, so sorting the cuts d{u, v}
in reverse sorts the edge weights.  Guessing where the sorted buckets fall
into the dyadic ranges 0, [1, 2), [2, 4), ... gives a 2-approximation of
every weight for the right guess, and the true minimum cut is then among
the cuts within a factor 2 of the guessed minimum.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

from ..errors import ScaleExceeded
from ..sieve import merge_sort
from .graph import members
from .mincut import MinCutResult

MAX_N, MAX_B, MAX_R = 12, 4, 2
MAX_GUESSES = 200_000


def _group_sorted(items, cmp):
    """Sort then split into runs of comparison-equal neighbors."""
    order = merge_sort(list(items), cmp)
    groups = [[order[0]]]
    for a, b in zip(order, order[1:]):
        if cmp(a, b) == 0:
            groups[-1].append(b)
        else:
            groups.append([b])
    return groups


def _dyadic_levels(B: int) -> list:
    return [0] + [2 ** i for i in range(int(math.floor(math.log2(B))) + 1)] if B >= 1 else [0]


def _all_cut_incidence(n: int, pairs: list) -> tuple:
    """Rows: canonical cut masks (vertex n-1 outside); columns: pairs crossing them."""
    masks = np.arange(1, 1 << (n - 1), dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)) & 1
    u = np.array([p[0] for p in pairs])
    v = np.array([p[1] for p in pairs])
    return masks, (bits[:, u] != bits[:, v]).astype(np.float64)


def weighted_mincut_fewclasses(oracle, B: int, r: int | None = None,
                               max_guesses: int = MAX_GUESSES) -> MinCutResult:
    n = oracle.n
    if n < 3:
        raise ValueError("need at least three vertices")
    if n > MAX_N or B > MAX_B:
        raise ScaleExceeded(f"n={n}, B={B} beyond caps n<={MAX_N}, B<={MAX_B}")
    start = oracle.ledger.total

    classes = _group_sorted(range(n), lambda a, b: oracle.compare_cuts(1 << a, 1 << b))
    if len(classes) > (r if r is not None else MAX_R) or len(classes) > MAX_R:
        raise ScaleExceeded(f"{len(classes)} degree classes")
    cls_of = {v: i for i, c in enumerate(classes) for v in c}

    pairs = list(itertools.combinations(range(n), 2))
    by_class: dict = {}
    for p in pairs:
        key = tuple(sorted((cls_of[p[0]], cls_of[p[1]])))
        by_class.setdefault(key, []).append(p)

    def pair_cmp(a, b):
        return oracle.compare_cuts((1 << a[0]) | (1 << a[1]), (1 << b[0]) | (1 << b[1]))

    levels = _dyadic_levels(B)
    # buckets in increasing weight order: reverse of increasing pair-cut order
    bucket_lists = [list(reversed(_group_sorted(ps, pair_cmp))) for ps in by_class.values()]
    per_class = [math.comb(len(bl) + len(levels) - 1, len(levels) - 1) for bl in bucket_lists]
    total_guesses = math.prod(per_class)
    if total_guesses > max_guesses:
        raise ScaleExceeded(f"{total_guesses} weight guesses")

    col = {p: i for i, p in enumerate(pairs)}
    masks, M = _all_cut_incidence(n, pairs)
    choices = []
    for bl in bucket_lists:
        opts = []
        for assign in itertools.combinations_with_replacement(range(len(levels)), len(bl)):
            vec = np.zeros(len(pairs))
            for bucket, lev in zip(bl, assign):
                for p in bucket:
                    vec[col[p]] = levels[lev]
            opts.append(vec)
        choices.append(opts)

    candidates = set()
    batch = []

    def flush():
        if not batch:
            return
        G = np.stack(batch, axis=1)
        vals = M @ G
        lim = 2 * vals.min(axis=0) + 1e-9
        hit = np.nonzero((vals <= lim).any(axis=1))[0]
        candidates.update(int(masks[i]) for i in hit)
        batch.clear()

    for combo in itertools.product(*choices):
        batch.append(np.sum(combo, axis=0))
        if len(batch) >= 2048:
            flush()
    flush()

    ordered = sorted(candidates)
    best, checks = ordered[0], 0
    for c in ordered[1:]:
        checks += 1
        if oracle.compare_cuts(c, best) < 0:
            best = c
    q = oracle.ledger.snapshot()
    stats = {"classes": len(classes), "guesses": total_guesses,
             "candidates": len(candidates), "queries_used": oracle.ledger.total - start}
    return MinCutResult(frozenset(members(best)), None, checks, q, stats)
