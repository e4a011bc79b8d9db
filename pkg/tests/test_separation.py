import itertools
import random

import sympy
from hypothesis import given
from hypothesis import strategies as st

from cmpopt.gsl import gsl_run
from cmpopt.oracle import ComparisonOracle, ExplicitFamily, HiddenWeights
from cmpopt.separation import (EXHAUSTED, LinearMatroid, MatroidSeparator, basis_cost_polynomial,
                               matroid_separate, matroid_separate_modp, matroid_separate_plain,
                               prime_scan_limit, scalar_encode, separate_powerset, witness_basis)

# reduced signed incidence matrix of the triangle with edges 01, 02, 12
K3 = [[1, 1, 0], [-1, 0, 1]]


def brute_costs(V, c) -> dict:
    """cost -> sum of det^2 over bases, via sympy determinants."""
    k, n = len(V), len(V[0])
    out = {}
    for S in itertools.combinations(range(n), k):
        d = sympy.Matrix([[V[r][j] for j in S] for r in range(k)]).det()
        if d != 0:
            t = sum(c[j] for j in S)
            out[t] = out.get(t, 0) + d * d
    return out


def random_matroid(rng, n, k, M=20):
    while True:
        V = [[rng.randint(-M, M) for _ in range(n)] for _ in range(k)]
        if sympy.Matrix(V).rank() == k:
            return V


def test_scalar_encoding_examples():
    assert scalar_encode((0, 0), n=2, M=3) == (3 * 2 * 3) ** 2
    assert scalar_encode((1,), n=2, M=1) == 7


def test_scalar_encoding_preserves_subset_sums():
    rng = random.Random(1)
    for _ in range(30):
        n, s, M = rng.randint(1, 5), rng.randint(1, 3), rng.randint(1, 3)
        vecs = [tuple(rng.randint(-M, M) for _ in range(s)) for _ in range(n)]
        g = [scalar_encode(v, n, M) for v in vecs]
        subsets = [S for r in range(n + 1) for S in itertools.combinations(range(n), r)]
        for A, B in itertools.combinations(subsets, 2):
            if len(A) != len(B):
                continue  # the b^s term counts set sizes
            same_vec = all(sum(vecs[i][j] for i in A) == sum(vecs[i][j] for i in B) for j in range(s))
            assert (sum(g[i] for i in A) == sum(g[i] for i in B)) == same_vec


def test_powerset_separation_examples():
    assert separate_powerset([(1,)], [(0,)]) == frozenset({0})
    assert separate_powerset([(1,), (1,)], [(0,), (1,), (2,)]) is EXHAUSTED


@st.composite
def powerset_instance(draw):
    n = draw(st.integers(1, 4))
    cols = draw(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=n, max_size=n))
    Z = draw(st.sets(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), max_size=8))
    return cols, Z


@given(powerset_instance())
def test_powerset_separation_matches_scan(inst):
    cols, Z = inst
    sums = {tuple(sum(cols[i][j] for i in S) for j in range(2))
            for r in range(len(cols) + 1) for S in itertools.combinations(range(len(cols)), r)}
    res = separate_powerset(cols, Z)
    if res is EXHAUSTED:
        assert sums <= Z
    else:
        assert tuple(sum(cols[i][j] for i in res) for j in range(2)) not in Z


def test_polynomial_examples():
    assert basis_cost_polynomial([[1, 1]], (0, 1)) == {0: 1, 1: 1}
    assert basis_cost_polynomial([[1, 0], [0, 1]], (2, 3)) == {5: 1}
    assert basis_cost_polynomial(K3, (1, 1, 2)) == {2: 1, 3: 2}


def test_plain_separation_examples():
    assert matroid_separate_plain(K3, (1, 1, 2), {2}) == 3
    assert matroid_separate_plain(K3, (1, 1, 2), {2, 3, 7}) is EXHAUSTED


def test_modp_examples():
    # every basis costs 2 and 2 is excluded
    assert matroid_separate_modp([[1, 1, 1]], (2, 2, 2), {2}, seed=0) is EXHAUSTED
    assert matroid_separate_modp([[1, 0], [0, 1]], (4, 9), set(), seed=0) == 13


def test_witness_examples():
    assert witness_basis([[1, 0], [0, 1]], (3, 3), 6) == frozenset({0, 1})
    assert witness_basis(K3, (1, 1, 2), 2) == frozenset({0, 1})


def test_uniform_rank_one_separator_stops_after_one_bucket():
    mat = LinearMatroid([[1, 1]])
    fam = ExplicitFamily(2, [{0}, {1}])
    o = ComparisonOracle(fam, HiddenWeights.integer((1, 1), 1))
    state = gsl_run(fam, o, MatroidSeparator(mat, seed=0))
    assert len(state.buckets) == 1 and state.dim == 1


def test_end_to_end_gsl_sorts_bases():
    rng = random.Random(12)
    V = random_matroid(rng, 8, 3, M=3)
    mat = LinearMatroid(V)
    bases = list(mat.bases())
    w = [rng.randint(-3, 3) for _ in range(8)]
    fam = ExplicitFamily(8, bases)
    o = ComparisonOracle(fam, HiddenWeights.integer(w, 3))
    state = gsl_run(fam, o, MatroidSeparator(mat, seed=1))
    weight = lambda S: sum(w[i] for i in S)
    distinct = sorted({weight(S) for S in bases})
    for S in bases:
        x = tuple(1 if i in S else 0 for i in range(8))
        assert state.rank_of(state.bucket_of(x)) == distinct.index(weight(S))


def test_random_support_and_witnesses():
    rng = random.Random(5)
    for _ in range(25):
        n, k = rng.randint(2, 7), rng.randint(1, 3)
        k = min(k, n)
        V = random_matroid(rng, n, k)
        c = [rng.randint(0, 6) for _ in range(n)]
        truth = brute_costs(V, c)
        poly = basis_cost_polynomial(V, c)
        assert set(poly) == set(truth)
        assert all(poly[t] == truth[t] for t in truth)
        Z = {t for t in truth if rng.random() < 0.5}
        plain = matroid_separate_plain(V, c, Z)
        modp = matroid_separate_modp(V, c, Z, seed=rng.randrange(1000))
        assert (plain is EXHAUSTED) == (modp is EXHAUSTED) == (set(truth) <= Z)
        if modp is not EXHAUSTED:
            assert modp in truth and modp not in Z
            S = witness_basis(V, c, modp)
            assert sympy.Matrix([[V[r][j] for j in sorted(S)] for r in range(k)]).det() != 0
            assert sum(c[j] for j in S) == modp
        assert matroid_separate(V, c, Z) == plain or (plain is EXHAUSTED and matroid_separate(V, c, Z) is EXHAUSTED)


def test_prime_scan_limit_formula():
    assert prime_scan_limit(1, 1, 1) == 4 * 1 * 2 + 16
    assert prime_scan_limit(2, 4, 5) == 4 * 4 * 5 + 16
