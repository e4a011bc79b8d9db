import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmpopt.errors import InfeasibleQuery, NotEnumerable
from cmpopt.oracle import (ComparisonOracle, ExplicitFamily, HiddenWeights, KSubsetFamily,
                           PowerSetFamily, QueryLedger, brute_force_argmin, from_indicator,
                           indicator)


def oracle(w, family=None):
    family = family or PowerSetFamily(len(w))
    return ComparisonOracle(family, HiddenWeights(tuple(w)))


def test_compare_examples():
    # elements are 0-indexed here
    assert oracle((1, 2)).compare({0}, {1}) == -1
    assert oracle((1, 1, 1)).compare({0, 1}, {2}) == 1
    assert oracle((5, -3)).compare({0, 1}, {0, 1}) == 0


def test_equality_examples():
    assert oracle((1, 2, 3)).compare_equality({0, 1}, {2})
    assert oracle((1, 2)).compare_equality({1}, {1})
    assert not oracle((1, 2)).compare_equality({0}, {1})


def test_constant_examples():
    assert oracle((1, -1)).compare_constant({0, 1}, 0) == 0
    assert oracle((2,)).compare_constant({0}, 1) == 1
    assert oracle((2,)).compare_constant({0}, 3) == -1


def test_brute_force_examples():
    fam = ExplicitFamily(2, [{0}, {1}])
    assert brute_force_argmin(fam, HiddenWeights((3, 1))) == frozenset({1})
    assert brute_force_argmin(ExplicitFamily(3, [set()]), HiddenWeights((4, -7, 0))) == frozenset()


def test_brute_force_matches_scan():
    rng = random.Random(6)
    for _ in range(20):
        sets = [frozenset(i for i in range(6) if rng.random() < 0.5) for _ in range(15)]
        w = HiddenWeights(tuple(rng.randint(-5, 5) for _ in range(6)))
        best = brute_force_argmin(ExplicitFamily(6, sets), w)
        assert w.weight(best) == min(w.weight(S) for S in sets)


def test_empty_family_raises():
    with pytest.raises(NotEnumerable):
        brute_force_argmin(ExplicitFamily(2, []), HiddenWeights((1, 1)))


def test_infeasible_query_rejected():
    o = oracle((1, 2, 3), KSubsetFamily(3, 2))
    with pytest.raises(InfeasibleQuery):
        o.compare({0}, {1, 2})
    assert o.ledger.total == 0


def test_integer_bound_enforced():
    HiddenWeights.integer([3, -3], 3)
    with pytest.raises(ValueError):
        HiddenWeights.integer([4], 3)
    with pytest.raises(ValueError):
        HiddenWeights.integer([Fraction(1, 2)], 3)


def test_ledger_counts_and_transcript():
    o = oracle((1, 2, 3))
    o.compare({0}, {1})
    o.compare({0}, {1})  # repeats are charged again
    o.compare_equality({2}, {0, 1})
    o.compare_constant({2}, Fraction(5, 2))
    assert o.ledger.snapshot() == {"compare": 2, "constant": 1, "equality": 1}
    assert o.ledger.total == 4
    recs = [json.loads(line) for line in o.ledger.to_jsonl().splitlines()]
    assert [r["index"] for r in recs] == [0, 1, 2, 3]
    assert recs[0] == {"kind": "compare", "lhs": [0], "rhs": [1], "answer": -1, "index": 0}
    assert recs[2]["answer"] == 1 and recs[2]["rhs"] == [0, 1]
    assert recs[3]["rhs"] == "5/2"


def test_unrecorded_ledger_still_counts():
    led = QueryLedger(record=False)
    o = ComparisonOracle(PowerSetFamily(2), HiddenWeights((1, 2)), led)
    o.compare({0}, {1})
    assert led.count_compare == 1 and led.transcript == []


def test_indicator_roundtrip():
    assert indicator({0, 2}, 4) == (1, 0, 1, 0)
    assert from_indicator((0, 1, 1)) == frozenset({1, 2})


weights = st.lists(st.integers(-20, 20), min_size=1, max_size=6)


@given(weights, st.data())
def test_compare_is_antisymmetric_and_matches_weights(w, data):
    n = len(w)
    subset = st.sets(st.integers(0, n - 1))
    S, T = data.draw(subset), data.draw(subset)
    o = oracle(w)
    a = o.compare(S, T)
    assert a == -o.compare(T, S)
    diff = sum(w[i] for i in S) - sum(w[i] for i in T)
    assert a == (diff > 0) - (diff < 0)
    assert o.compare_equality(S, T) == (a == 0)


@given(weights, st.data())
def test_compare_is_transitive(w, data):
    n = len(w)
    subset = st.sets(st.integers(0, n - 1))
    S, T, U = data.draw(subset), data.draw(subset), data.draw(subset)
    o = oracle(w)
    if o.compare(S, T) <= 0 and o.compare(T, U) <= 0:
        assert o.compare(S, U) <= 0
