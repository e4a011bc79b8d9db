import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmpopt.errors import Unreachable
from cmpopt.experiments import bellman_ford_reference
from cmpopt.paths import WalkOracle, shortest_path_walk_comparisons


def solve(n, edges, lengths, s, t):
    o = WalkOracle(n, edges, lengths, s, t)
    return shortest_path_walk_comparisons(n, edges, s, t, o), o


def walk_length(o, W):
    L = o.reveal()
    return sum((L[(a, b)] for a, b in zip(W, W[1:])), Fraction(0))


def nx_reference(n, edges, lengths, s, t):
    """("path", dist) or ("negative_cycle", None), on vertices lying on some s-t walk."""
    G = nx.DiGraph()
    G.add_nodes_from(range(n))
    for (a, b), w in zip(edges, lengths):
        if not G.has_edge(a, b) or G[a][b]["weight"] > w:
            G.add_edge(a, b, weight=w)
    keep = (nx.descendants(G, s) | {s}) & (nx.ancestors(G, t) | {t})
    H = G.subgraph(keep)
    try:
        return "path", nx.bellman_ford_path_length(H, s, t)
    except nx.NetworkXUnbounded:
        return "negative_cycle", None


def test_single_edge():
    res, _ = solve(2, [(0, 1)], [5], 0, 1)
    assert res.kind == "path" and res.walk == (0, 1)


def test_diamond():
    edges = [(0, 1), (0, 2), (1, 3), (2, 3)]
    res, o = solve(4, edges, [1, 3, 5, 1], 0, 3)
    assert res.walk == (0, 2, 3) and walk_length(o, res.walk) == 4


def test_negative_triangle_certified():
    edges = [(0, 1), (1, 2), (2, 1), (2, 3)]
    res, o = solve(4, edges, [1, 1, -3, 1], 0, 3)
    assert res.kind == "negative_cycle" and res.certified
    assert res.cycle[0] == res.cycle[-1]
    assert walk_length(o, res.cycle) < 0


def test_negative_cycle_off_every_st_walk_is_ignored():
    # the 2-4 loop cannot reach t, so it does not matter
    edges = [(0, 1), (1, 3), (0, 2), (2, 4), (4, 2)]
    res, _ = solve(5, edges, [1, 1, 1, -5, 1], 0, 3)
    assert res.kind == "path" and res.walk == (0, 1, 3)


def test_unreachable():
    with pytest.raises(Unreachable):
        solve(3, [(0, 1)], [1], 0, 2)


def test_oracle_rejects_non_walks():
    o = WalkOracle(3, [(0, 1), (1, 2)], [1, 1], 0, 2)
    with pytest.raises(ValueError):
        o.compare_walks((0, 2), (0, 1, 2))
    with pytest.raises(ValueError):
        o.compare_walks((1, 2), (0, 1, 2))


def random_digraph(rng, n, m, lo, hi):
    edges = [tuple(rng.sample(range(n), 2)) for _ in range(m)]
    return edges, [rng.randint(lo, hi) for _ in edges]


@given(st.integers(0, 10 ** 6), st.integers(2, 9), st.integers(-3, 1))
def test_vs_networkx(seed, n, lo):
    rng = random.Random(seed)
    edges, lengths = random_digraph(rng, n, 3 * n, lo, 9)
    ref = nx_reference(n, edges, lengths, 0, n - 1) if nx.has_path(
        nx.DiGraph(edges + [(v, v) for v in range(n)]), 0, n - 1) else ("unreachable", None)
    if ref[0] == "unreachable":
        with pytest.raises(Unreachable):
            solve(n, edges, lengths, 0, n - 1)
        return
    res, o = solve(n, edges, lengths, 0, n - 1)
    assert res.kind == ref[0]
    if res.kind == "path":
        assert walk_length(o, res.walk) == ref[1]
        assert len(set(res.walk)) == len(res.walk)
    else:
        assert walk_length(o, res.cycle) < 0
    assert res.comparisons <= n ** 3


@given(st.integers(0, 10 ** 6))
def test_package_reference_agrees_with_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    edges, lengths = random_digraph(rng, n, 2 * n, -2, 6)
    ours = bellman_ford_reference(n, edges, [Fraction(x) for x in lengths], 0, n - 1)
    if ours[0] != "unreachable":
        assert ours == nx_reference(n, edges, lengths, 0, n - 1)
