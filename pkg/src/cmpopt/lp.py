"""Exact cone membership by phase-one simplex on an integer tableau.

The tableau is kept fraction-free: every entry is an integer and the true
tableau is the stored one divided by the last pivot value.  Entering and
leaving variables follow Bland's rule, so the method terminates without any
tolerances.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .errors import DimensionMismatch

# int64 tableau entries stay below this so products fit in 63 bits
_SMALL = 1 << 31


@dataclass
class ConeResult:
    member: bool
    coefficients: list | None = None
    certificate: list | None = None

    def __bool__(self) -> bool:
        return self.member


def _to_fraction(v):
    return v if isinstance(v, Fraction) else Fraction(v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def verify(result: ConeResult, x, V) -> bool:
    """Check the returned witness exactly."""
    if result.member:
        coeffs = result.coefficients
        if any(c < 0 for c in coeffs):
            return False
        return all(sum(c * v[i] for c, v in zip(coeffs, V)) == x[i] for i in range(len(x)))
    h = result.certificate
    return all(_dot(h, v) >= 0 for v in V) and _dot(h, x) < 0


def _general_tableau(x, V, d, m, ncol):
    # scale each coordinate to integers, then flip rows so the rhs is >= 0
    scale, sgn = [], []
    rows = []
    for i in range(d):
        col = [x[i]] + [v[i] for v in V]
        if all(type(c) is int for c in col):
            L, ints = 1, col
        else:
            col = [_to_fraction(c) for c in col]
            L = lcm(*(c.denominator for c in col))
            ints = [c.numerator * (L // c.denominator) for c in col]
        s = -1 if ints[0] < 0 else 1
        scale.append(L)
        sgn.append(s)
        rows.append([s * c for c in ints] if s < 0 else list(ints))
    T = np.zeros((d + 1, ncol), dtype=object)
    for i in range(d):
        T[i, :m] = rows[i][1:]
        T[i, m + i] = 1
        T[i, -1] = rows[i][0]
    T[d, :m] = [-sum(rows[i][1 + j] for i in range(d)) for j in range(m)]
    T[d, -1] = -sum(rows[i][0] for i in range(d))
    if max(abs(int(v)) for v in T.flat) < _SMALL:
        T = T.astype(np.int64)
    return T, sgn, scale


def _int_tableau(x, A):
    """Phase-one tableau straight from an integer (m, d) generator array."""
    m, d = A.shape
    b = np.asarray(x, dtype=np.int64)
    sgn = np.where(b < 0, -1, 1)
    T = np.zeros((d + 1, m + d + 1), dtype=np.int64)
    T[:d, :m] = A.T * sgn[:, None]
    T[:d, m:m + d] = np.eye(d, dtype=np.int64)
    T[:d, -1] = b * sgn
    T[d, :m] = -T[:d, :m].sum(axis=0)
    T[d, -1] = -T[:d, -1].sum()
    return T, [int(v) for v in sgn], [1] * d


def cone_member(x, V) -> ConeResult:
    """Decide x in cone(V) exactly; returns coefficients or a separating h.

    V may be a list of vectors or an integer array of shape (m, d).
    """
    d = len(x)
    if isinstance(V, np.ndarray) and V.dtype.kind == "i" and all(type(c) is int for c in x):
        if V.ndim != 2 or (V.shape[0] and V.shape[1] != d):
            raise DimensionMismatch(f"expected dimension {d}, got shape {V.shape}")
        m = V.shape[0]
        fast = m > 0 and int(np.abs(V).max(initial=0)) < _SMALL // (d + 1) \
            and max(abs(c) for c in x) < _SMALL // (d + 1)
    else:
        V = [list(v) for v in V] if isinstance(V, np.ndarray) else list(V)
        for v in V:
            if len(v) != d:
                raise DimensionMismatch(f"expected dimension {d}, got {len(v)}")
        m = len(V)
        fast = False
    if all(c == 0 for c in x):
        return ConeResult(True, coefficients=[Fraction(0)] * m)
    if m == 0:
        return ConeResult(False, certificate=[-_to_fraction(c) for c in x])
    ncol = m + d + 1
    if fast:
        T, sgn, scale = _int_tableau(x, V)
    else:
        if isinstance(V, np.ndarray):
            V = [[int(c) for c in v] for v in V]
        T, sgn, scale = _general_tableau(x, V, d, m, ncol)
    basis = [m + i for i in range(d)]
    D = 1

    while True:
        neg = np.flatnonzero(T[d, :m + d] < 0)
        if neg.size == 0:
            break
        enter = int(neg[0])
        col = T[:d, enter]
        r = -1
        for i in np.flatnonzero(col > 0):
            if r < 0:
                r = i
                continue
            lhs = int(T[i, -1]) * int(col[r])
            rhs = int(T[r, -1]) * int(col[i])
            if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                r = i
        if r < 0:  # cannot happen in phase one: objective is bounded below
            raise RuntimeError("unbounded phase-one problem")
        if T.dtype != object and (np.abs(T).max() >= _SMALL or abs(D) >= _SMALL):
            T = T.astype(object)
        p = T[r, enter]
        pivot_row = T[r].copy()
        T = (p * T - np.outer(T[:, enter], pivot_row)) // D
        T[r] = pivot_row
        D = int(p)
        basis[r] = enter

    if T[d, -1] == 0:
        coeffs = [Fraction(0)] * m
        for i, b in enumerate(basis):
            if b < m:
                coeffs[b] = Fraction(int(T[i, -1]), int(D))
        return ConeResult(True, coefficients=coeffs)
    # y_i = 1 - rc_i with rc_i the reduced cost of artificial i
    h = [Fraction(-sgn[i] * scale[i] * (int(D) - int(T[d, m + i]))) for i in range(d)]
    g = gcd(*(c.numerator for c in h))
    if g > 1:
        h = [c / g for c in h]
    return ConeResult(False, certificate=h)
