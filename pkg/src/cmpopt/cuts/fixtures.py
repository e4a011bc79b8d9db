"""Small graphs whose comparison tables expose what cut comparisons cannot see."""
from __future__ import annotations

import itertools
from fractions import Fraction

from .graph import HiddenGraph, mask_of
from .oracle import CutOracle

A, B, C, D = range(4)
NAMES = "abcd"

# two weightings of K4 on a, b, c, d; only ab and ac trade places
HEAVY_EDGE_UNIVERSES = {
    1: {(A, B): Fraction(100001, 100), (A, C): Fraction(99999, 100), (A, D): Fraction(10),
        (B, C): Fraction(100), (B, D): Fraction(50), (C, D): Fraction(1)},
    2: {(A, B): Fraction(99999, 100), (A, C): Fraction(100001, 100), (A, D): Fraction(10),
        (B, C): Fraction(100), (B, D): Fraction(50), (C, D): Fraction(1)},
}

# strictly decreasing cut weights shared by both universes
HEAVY_EDGE_ORDER = [(A, D), (A,), (A, B), (B,), (A, C), (C,), (D,)]


def heavy_edge_graph(universe: int, cd=None) -> HiddenGraph:
    w = dict(HEAVY_EDGE_UNIVERSES[universe])
    if cd is not None:
        w[(C, D)] = Fraction(cd)
    return HiddenGraph(4, w)


def cut_order_holds(graph: HiddenGraph, order=HEAVY_EDGE_ORDER) -> bool:
    """Every consecutive pair in `order` compares strictly downward."""
    o = CutOracle(graph)
    return all(o.compare_cuts(mask_of(s), mask_of(t)) > 0 for s, t in zip(order, order[1:]))


def label(side) -> str:
    return "{" + ",".join(NAMES[v] for v in side) + "}"


def comparison_table(graph: HiddenGraph) -> dict:
    """Signs of every ordered pair of nontrivial cuts."""
    o = CutOracle(graph)
    sets = range(1, graph.full)
    return {(s, t): o.compare_cuts(s, t) for s, t in itertools.product(sets, sets)}


def complete_graph(n: int) -> HiddenGraph:
    return HiddenGraph.from_edges(n, list(itertools.combinations(range(n), 2)))


def empty_graph(n: int) -> HiddenGraph:
    return HiddenGraph(n, {})


def circular_ladder(k: int, sign: int = 1, gamma=Fraction(1, 10 ** 6)) -> HiddenGraph:
    """Two unit k-cycles joined by a perfect matching of weight 2/(k-1) + sign*gamma.

    sign = +1 makes a degree cut (value 2 + rung) the unique kind of minimum;
    sign = -1 makes the bisection between the cycles (value k * rung) minimal.
    """
    if k < 3:
        raise ValueError("k >= 3")
    rung = Fraction(2, k - 1) + sign * Fraction(gamma)
    w = {}
    for i in range(k):
        w[(i, (i + 1) % k) if i + 1 < k else (0, k - 1)] = 1
        w[(k + i, k + (i + 1) % k) if i + 1 < k else (k, 2 * k - 1)] = 1
        w[(i, k + i)] = rung
    return HiddenGraph(2 * k, w)
