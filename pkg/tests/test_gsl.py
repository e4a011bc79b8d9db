import itertools
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmpopt.errors import SeparatorInconsistent
from cmpopt.gsl import (EnumerationSeparator, GslState, classify, comparison_bound, gsl_run,
                        gsl_run_equality_only, potential)
from cmpopt.oracle import (ComparisonOracle, ExplicitFamily, HiddenWeights, PowerSetFamily,
                           from_indicator, indicator)
from cmpopt.separation import PowerSetSeparator


def powerset_oracle(w, B=None):
    B = B if B is not None else max([abs(x) for x in w] + [1])
    return ComparisonOracle(PowerSetFamily(len(w)), HiddenWeights.integer(w, B))


def weight_ranks(w):
    n = len(w)
    sums = {x: sum(a * b for a, b in zip(w, x)) for x in itertools.product((0, 1), repeat=n)}
    distinct = sorted(set(sums.values()))
    return {x: distinct.index(v) for x, v in sums.items()}


def test_empty_family_single_bucket():
    fam = ExplicitFamily(3, [set()])
    o = ComparisonOracle(fam, HiddenWeights((1, 2, 3)))
    st_ = gsl_run(fam, o)
    assert len(st_.buckets) == 1 and o.ledger.total == 0
    st_ = gsl_run_equality_only(fam, ComparisonOracle(fam, HiddenWeights((1, 2, 3))))
    assert len(st_.buckets) == 1


def test_three_element_example():
    # weights 1, 1, 2: classes 0..4; {2} ties {0, 1} and {0} ties {1}
    o = powerset_oracle((1, 1, 2))
    state = gsl_run(o.family, o, PowerSetSeparator(3))
    weights = sorted(sum(a * b for a, b in zip((1, 1, 2), b.representative)) for b in state.buckets)
    assert weights == [0, 1, 2, 3, 4]
    assert state.dim == 2
    assert state.subspace.contains([1, -1, 0]) and state.subspace.contains([1, 1, -1])


def test_n8_classification_is_exhaustively_correct():
    rng = random.Random(8)
    w = [rng.randint(-3, 3) for _ in range(8)]
    o = powerset_oracle(w, 3)
    state = gsl_run(o.family, o, PowerSetSeparator(8))
    ranks = weight_ranks(w)
    assert all(classify(state, x) == r for x, r in ranks.items())
    assert state.steps <= 2 * 8 * 3 + 8


def test_classify_representatives_and_members():
    o = powerset_oracle((2, -1, 1))
    state = gsl_run(o.family, o)
    for bid, b in enumerate(state.buckets):
        for m in b.members:
            assert classify(state, m) == state.rank_of(bid)


def test_potential_grows_by_one_per_step():
    o = powerset_oracle((3, 1, -2, 1))
    state = gsl_run(o.family, o, PowerSetSeparator(4))
    assert state.potentials == list(range(1, 1 + state.steps))
    assert potential(state) == state.dim + len(state.buckets)


def test_state_json_roundtrip():
    o = powerset_oracle((1, 2, -1))
    state = gsl_run(o.family, o)
    back = GslState.from_json(state.to_json())
    for x in itertools.product((0, 1), repeat=3):
        assert classify(back, x) == classify(state, x)
    data = json.loads(state.to_json())
    assert set(data) == {"n", "buckets", "basis", "order"}


def test_inconsistent_separator_detected():
    o = powerset_oracle((1, 1))
    calls = iter([(1, 0), (1, 0)])
    with pytest.raises(SeparatorInconsistent):
        gsl_run(o.family, o, lambda s: next(calls, None))


def test_comparison_bound_values():
    assert comparison_bound(1, 1) == 2
    assert comparison_bound(8, 3) == 6


@st.composite
def small_weights(draw):
    n = draw(st.integers(1, 6))
    B = draw(st.integers(1, 3))
    return draw(st.lists(st.integers(-B, B), min_size=n, max_size=n)), B


@given(small_weights())
def test_partition_matches_weight_classes(inst):
    w, B = inst
    n = len(w)
    for run in (gsl_run, gsl_run_equality_only):
        o = powerset_oracle(w, B)
        state = run(o.family, o, PowerSetSeparator(n))
        ranks = weight_ranks(w)
        ids = {x: state.bucket_of(x) for x in ranks}
        assert None not in ids.values()
        for x, y in itertools.combinations(ranks, 2):
            assert (ids[x] == ids[y]) == (ranks[x] == ranks[y])
        assert state.steps <= 2 * n * B + n
        if run is gsl_run:
            assert all(state.rank_of(ids[x]) == r for x, r in ranks.items())
            assert o.ledger.count_compare <= state.steps * comparison_bound(n, B)


@given(small_weights())
def test_enumeration_separator_gives_same_partition(inst):
    w, B = inst
    o1, o2 = powerset_oracle(w, B), powerset_oracle(w, B)
    a = gsl_run(o1.family, o1, PowerSetSeparator(len(w)))
    b = gsl_run(o2.family, o2, EnumerationSeparator(o2.family))
    for x in itertools.product((0, 1), repeat=len(w)):
        assert classify(a, x) == classify(b, x)


def test_equality_query_count_bound():
    rng = random.Random(5)
    for _ in range(10):
        w = [rng.randint(-2, 2) for _ in range(6)]
        o = powerset_oracle(w, 2)
        state = gsl_run_equality_only(o.family, o, PowerSetSeparator(6))
        C = len(state.buckets)
        assert o.ledger.count_equality <= (6 + C) * C
