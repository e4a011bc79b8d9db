import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmpopt.errors import NotCommonIndependent
from cmpopt.intersection import (bipartite_matroids, build_intersection_graph, common_oracle,
                                 min_weight_common_independent)
from cmpopt.matroids import FreeMatroid, GraphicMatroid, UniformMatroid, random_linear


def brute_min(M1, M2, w):
    return min(sum(w[e] for e in S) for S in M1.independent_sets() if M2.is_independent(S))


def test_empty_set_exchange_graph():
    M = UniformMatroid(1, 3)
    H = build_intersection_graph(M, M, frozenset())
    assert H.X1 == H.X2 == {0, 1, 2}
    assert all(not a for a in H.out_arcs.values())


def test_not_common_independent():
    M1, M2 = UniformMatroid(1, 3), FreeMatroid(3)
    with pytest.raises(NotCommonIndependent):
        build_intersection_graph(M1, M2, {0, 1})


def test_two_by_two_bipartite():
    edges = [(0, 0), (0, 1), (1, 0), (1, 1)]
    M1, M2 = bipartite_matroids(2, 2, edges)
    w = [-1, -5, -5, -1]
    res = min_weight_common_independent(M1, M2, common_oracle(M1, M2, w))
    assert res.best == {1, 2}
    # positive weights: the empty set wins
    res = min_weight_common_independent(M1, M2, common_oracle(M1, M2, [1, 5, 5, 1]))
    assert res.best == frozenset()


def test_free_matroids():
    M = FreeMatroid(4)
    assert min_weight_common_independent(M, M, common_oracle(M, M, [1, 2, 3, 4])).best == frozenset()
    assert min_weight_common_independent(M, M, common_oracle(M, M, [1, -2, 3, 4])).best == {1}


def test_extremes_grow_by_one():
    edges = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 0)]
    M1, M2 = bipartite_matroids(3, 3, edges)
    res = min_weight_common_independent(M1, M2, common_oracle(M1, M2, [-3, -1, -4, -1, -5]))
    assert [len(Y) for Y in res.extremes] == list(range(len(res.extremes)))
    w = [-3, -1, -4, -1, -5]
    assert sum(w[e] for e in res.best) == brute_min(M1, M2, w)


@given(st.integers(0, 10 ** 6))
def test_bipartite_vs_networkx_matching(seed):
    rng = random.Random(seed)
    left, right = 3, 3
    edges = sorted({(rng.randrange(left), rng.randrange(right)) for _ in range(6)})
    w = [rng.randint(-9, 9) for _ in edges]
    M1, M2 = bipartite_matroids(left, right, edges)
    res = min_weight_common_independent(M1, M2, common_oracle(M1, M2, w))
    # reference: max-weight matching on the negated weights, keeping only gainful edges
    G = nx.Graph()
    for (a, b), wt in zip(edges, w):
        if wt < 0:
            G.add_edge(("L", a), ("R", b), weight=-wt)
    ref = -sum(G[u][v]["weight"] for u, v in nx.max_weight_matching(G))
    assert sum(w[e] for e in res.best) == ref


@given(st.integers(0, 10 ** 6))
def test_graphic_and_linear_vs_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    M1 = GraphicMatroid(4, [tuple(rng.sample(range(4), 2)) for _ in range(n)])
    M2 = random_linear(min(2, n), n, 5, rng)
    w = [rng.randint(-6, 6) for _ in range(n)]
    res = min_weight_common_independent(M1, M2, common_oracle(M1, M2, w))
    assert M1.is_independent(res.best) and M2.is_independent(res.best)
    assert sum(w[e] for e in res.best) == brute_min(M1, M2, w)


def test_every_extreme_is_min_for_its_size():
    rng = random.Random(11)
    for _ in range(10):
        edges = sorted({(rng.randrange(3), rng.randrange(3)) for _ in range(6)})
        w = [rng.randint(-9, 9) for _ in edges]
        M1, M2 = bipartite_matroids(3, 3, edges)
        res = min_weight_common_independent(M1, M2, common_oracle(M1, M2, w))
        common = [S for S in M1.independent_sets() if M2.is_independent(S)]
        for Y in res.extremes:
            best = min(sum(w[e] for e in S) for S in common if len(S) == len(Y))
            assert sum(w[e] for e in Y) == best
