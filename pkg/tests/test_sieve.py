import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmpopt.errors import EmptyPointSet
from cmpopt.geometry import boolean_conic_dim_bound
from cmpopt.oracle import ExplicitFamily, HiddenWeights, brute_force_argmin, from_indicator
from cmpopt.sieve import comparison_budget, lenient_elimination_count, merge_sort, sieve_optimize


def weighted_compare(points, w):
    def val(i):
        return sum(a * b for a, b in zip(w, points[i]))

    return lambda i, j: (val(i) > val(j)) - (val(i) < val(j))


def test_single_point_needs_no_comparisons():
    best, stats = sieve_optimize([(1, 0, 1)], lambda i, j: 1 / 0, k=3)
    assert best == 0 and stats.comparisons == 0


def test_cube_example():
    pts = list(itertools.product((0, 1), repeat=3))
    best, _ = sieve_optimize(pts, weighted_compare(pts, (-1, 2, 1)), boolean_conic_dim_bound(3), seed=0)
    assert pts[best] == (1, 0, 0)


def test_empty_input_rejected():
    with pytest.raises(EmptyPointSet):
        sieve_optimize([], lambda i, j: 0, k=2)


def test_full_cube_n8_matches_brute_force():
    rng = random.Random(11)
    pts = list(itertools.product((0, 1), repeat=8))
    fam = ExplicitFamily(8, [from_indicator(p) for p in pts])
    for _ in range(5):
        w = tuple(rng.randint(-4, 4) for _ in range(8))
        best, stats = sieve_optimize(pts, weighted_compare(pts, w), boolean_conic_dim_bound(8), rng=rng)
        assert from_indicator(pts[best]) == brute_force_argmin(fam, HiddenWeights(w))
        assert stats.comparisons <= comparison_budget(boolean_conic_dim_bound(8), len(pts))


@st.composite
def boolean_instance(draw):
    n = draw(st.integers(1, 6))
    pts = draw(st.lists(st.tuples(*[st.integers(0, 1)] * n), min_size=1, max_size=40, unique=True))
    w = draw(st.tuples(*[st.integers(-3, 3)] * n))
    return n, pts, w, draw(st.integers(0, 2 ** 20))


@given(boolean_instance())
def test_sieve_equals_brute_force(inst):
    n, pts, w, seed = inst
    best, _ = sieve_optimize(pts, weighted_compare(pts, w), boolean_conic_dim_bound(n), seed=seed)
    fam = ExplicitFamily(n, [from_indicator(p) for p in pts])
    assert from_indicator(pts[best]) == brute_force_argmin(fam, HiddenWeights(w))


@given(boolean_instance())
def test_small_k_still_exact(inst):
    # k only tunes the sample size; correctness does not depend on it
    n, pts, w, seed = inst
    best, _ = sieve_optimize(pts, weighted_compare(pts, w), 1, seed=seed)
    vals = [sum(a * b for a, b in zip(w, p)) for p in pts]
    assert vals[best] == min(vals)


@given(st.lists(st.integers(-5, 5), max_size=30))
def test_merge_sort_sorts_stably(xs):
    items = list(range(len(xs)))
    out = merge_sort(items, lambda i, j: (xs[i] > xs[j]) - (xs[i] < xs[j]))
    assert out == sorted(items, key=lambda i: xs[i])


def test_lenient_elimination_is_bounded():
    rng = random.Random(2)
    pts = list(itertools.product((0, 1), repeat=5))
    w = (3, -1, 2, -2, 1)
    order = sorted(range(len(pts)), key=lambda i: sum(a * b for a, b in zip(w, pts[i])))
    removed = lenient_elimination_count(pts, order, boolean_conic_dim_bound(5), rng)
    assert 0 <= removed < len(pts)
