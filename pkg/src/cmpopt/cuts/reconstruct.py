"""Recover a hidden simple graph from cut comparisons."""
from __future__ import annotations

import math

from ..errors import Unidentifiable
from .graph import mask_of
from .primitives import CutPrimitives


def _reconstruct_small(oracle) -> set:
    """n <= 3: the only nontrivial cuts are the degree cuts."""
    n = oracle.n
    if n < 2:
        return set()
    if n == 2:
        raise Unidentifiable("K2 and its complement give identical answers")
    s01 = oracle.compare_cuts(1, 2)
    s02 = oracle.compare_cuts(1, 4)
    s12 = oracle.compare_cuts(2, 4)
    if s01 == 0 and s02 == 0 and s12 == 0:
        raise Unidentifiable("K3 and its complement give identical answers")
    # exactly one vertex has a different degree; find it and its direction
    if s01 == 0:
        odd, s = 2, -s02      # s = sign(deg(odd) - deg(others))
    elif s02 == 0:
        odd, s = 1, -s01
    else:
        odd, s = 0, s01
    a, b = [v for v in range(3) if v != odd]
    if s < 0:
        return {(a, b)}
    return {tuple(sorted((odd, a))), tuple(sorted((odd, b)))}


def reconstruct_graph(oracle, prims: CutPrimitives | None = None) -> set:
    """Edge set {(u, v): u < v} of the hidden graph.

    Runs edge extraction vertex by vertex until n^2 / log2 n edges have
    been seen, then finishes with one-query-per-pair neighbor sweeps,
    whichever regime is cheaper for the density at hand.
    """
    n = oracle.n
    if n <= 3:
        return _reconstruct_small(oracle)
    prims = prims or CutPrimitives(oracle)
    switch = n * n / math.log2(n)
    edges = set()
    sweeping = False
    for u in range(n - 1):
        later = list(range(u + 1, n))
        if prims.isolated(u):
            continue
        if sweeping:
            found = prims.neighbors_in_set(u, mask_of(later))
        else:
            found = prims.extract_edges(u, later)
        edges.update((u, v) for v in found)
        if len(edges) >= switch:
            sweeping = True
    return edges
