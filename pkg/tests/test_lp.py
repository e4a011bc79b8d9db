from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import linprog

from cmpopt.errors import DimensionMismatch
from cmpopt.lp import cone_member, verify


def test_zero_vector_is_member():
    res = cone_member((0, 0), [(1, 2), (3, -1)])
    assert res.member and res.coefficients == [0, 0]


def test_generator_itself():
    res = cone_member((2, -1), [(2, -1)])
    assert res.member and res.coefficients == [1]


def test_outside_ray_with_witness():
    res = cone_member((-1, 0), [(1, 0)])
    assert not res.member
    assert verify(res, (-1, 0), [(1, 0)])
    assert res.certificate == [1, -1]
    # with <h, v> >= 0 and <h, x> < 0, the functional (1, 0) separates; (-1, 0) does not
    assert verify(type(res)(False, certificate=[1, 0]), (-1, 0), [(1, 0)])
    assert not verify(type(res)(False, certificate=[-1, 0]), (-1, 0), [(1, 0)])


def test_empty_generators():
    assert not cone_member((1, 0), [])
    assert cone_member((0, 0), [])


def test_rational_inputs():
    x = (Fraction(1, 2), Fraction(1, 3))
    V = [(Fraction(1, 4), 0), (0, Fraction(1, 6))]
    res = cone_member(x, V)
    assert res.member and res.coefficients == [2, 2]


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        cone_member((1, 2), [(1, 2, 3)])
    with pytest.raises(DimensionMismatch):
        cone_member((1, 2), np.zeros((2, 3), dtype=np.int64))


def test_large_entries_fall_back_to_exact_objects():
    big = 10 ** 30
    res = cone_member((big, 1), [(big, 0), (0, 1)])
    assert res.member and res.coefficients == [1, 1]
    res = cone_member((big, -1), [(big, 0), (0, 1)])
    assert not res.member and verify(res, (big, -1), [(big, 0), (0, 1)])


def _scipy_member(x, V) -> bool:
    if not any(x):
        return True
    if not V:
        return False
    A = np.array(V, dtype=float).T
    r = linprog(np.zeros(len(V)), A_eq=A, b_eq=np.array(x, dtype=float),
                bounds=[(0, None)] * len(V), method="highs")
    return r.status == 0


vec = lambda d: st.lists(st.integers(-4, 4), min_size=d, max_size=d)


@st.composite
def cone_instance(draw):
    d = draw(st.integers(1, 4))
    V = draw(st.lists(vec(d), max_size=6))
    x = draw(vec(d))
    return x, V


@given(cone_instance())
def test_witness_always_verifies(inst):
    x, V = inst
    assert verify(cone_member(x, V), x, V)


@given(cone_instance())
def test_agrees_with_floating_point_lp(inst):
    x, V = inst
    assert cone_member(x, V).member == _scipy_member(x, V)


@given(cone_instance())
def test_array_and_list_inputs_agree(inst):
    x, V = inst
    arr = np.array(V, dtype=np.int64).reshape(len(V), len(x))
    assert cone_member(x, arr).member == cone_member(x, V).member
