"""Separation oracles for subspace learning.

Two families are supported efficiently: the full powerset (dynamic
programming over prefix sums of lattice images) and bases of a linear
matroid, where the exponents of det(sum_i x^{c_i} v_i v_i^T) are exactly the
basis costs.  The latter is evaluated either over the integers (small costs)
or modulo x^p - 1 in a prime field.
"""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from math import lcm

from sympy import isprime

from .errors import (DegreeOverflow, ModpFailure, NoSuitablePrime, OutOfRange,
                     WitnessNotFound)
from .lattice import det_frac, det_int, det_mod, rank


class _Exhausted:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Exhausted"

    def __bool__(self):
        return False


EXHAUSTED = _Exhausted()

DEFAULT_DEGREE_CAP = 512


# -- scalar encoding --------------------------------------------------------

def scalar_encode(v, n: int, M: int, s: int | None = None) -> int:
    """g(v) = b^s + sum_j b^(j-1) v_j with base b = 3nM."""
    s = len(v) if s is None else s
    if len(v) != s:
        raise ValueError("vector length differs from s")
    for x in v:
        if abs(x) > M:
            raise OutOfRange(f"|{x}| > {M}")
    b = 3 * n * M
    return b ** s + sum(b ** j * int(x) for j, x in enumerate(v))


# -- powerset ---------------------------------------------------------------

def separate_powerset(columns, Z):
    """Subset S with sum_{i in S} w_i outside Z, or EXHAUSTED.

    Prefix value sets V_i grow until they outnumber Z; the first value (in
    discovery order) outside Z is traced back to a subset.
    """
    Z = set(map(tuple, Z))
    ell = len(Z)
    n = len(columns)
    dim = len(columns[0]) if columns else 0
    zero = (0,) * dim
    parent = {zero: None}  # value -> (element, previous value)
    order = [zero]
    for i in range(n):
        if len(order) > ell:
            break
        w = columns[i]
        for v in list(order):
            u = tuple(a + b for a, b in zip(v, w))
            if u not in parent:
                parent[u] = (i, v)
                order.append(u)
    for v in order:
        if v not in Z:
            S = set()
            while parent[v] is not None:
                i, v = parent[v]
                S.add(i)
            return frozenset(S)
    return EXHAUSTED


class PowerSetSeparator:
    """GSL separator for 2^U using the lattice image W x."""

    def __init__(self, n: int):
        self.n = n

    def __call__(self, state):
        W = state.W
        cols = [tuple(row[i] for row in W) for i in range(self.n)]
        S = separate_powerset(cols, state.rep_keys())
        if S is EXHAUSTED:
            return None
        return tuple(1 if i in S else 0 for i in range(self.n))


# -- linear matroids ----------------------------------------------------------

class LinearMatroid:
    """Column matroid of a k x n rational matrix of full row rank."""

    def __init__(self, V):
        self.V = [[Fraction(x) for x in row] for row in V]
        self.k = len(self.V)
        self.n = len(self.V[0]) if self.V else 0
        if rank(self.V) != self.k:
            raise ValueError("representation must have full row rank")

    def column(self, j) -> list:
        return [row[j] for row in self.V]

    def is_basis(self, S) -> bool:
        S = sorted(S)
        if len(S) != self.k:
            return False
        return det_frac([[row[j] for j in S] for row in self.V]) != 0

    def is_independent(self, S) -> bool:
        S = sorted(S)
        if len(S) > self.k:
            return False
        return rank([[self.V[r][j] for r in range(self.k)] for j in S]) == len(S)

    def bases(self):
        for S in itertools.combinations(range(self.n), self.k):
            if self.is_basis(S):
                yield frozenset(S)

    def greedy_last_basis(self) -> frozenset:
        """Lexicographically smallest basis indicator (scan from the last element)."""
        S = []
        for j in reversed(range(self.n)):
            if self.is_independent(S + [j]):
                S.append(j)
        return frozenset(S)

    @classmethod
    def parse(cls, text: str) -> "LinearMatroid":
        tok = text.split()
        k, n = int(tok[0]), int(tok[1])
        vals = [Fraction(t) for t in tok[2:2 + k * n]]
        if len(vals) != k * n:
            raise ValueError("truncated matrix")
        return cls([vals[r * n:(r + 1) * n] for r in range(k)])

    def dump(self) -> str:
        lines = [f"{self.k} {self.n}"]
        lines += [" ".join(str(x) for x in row) for row in self.V]
        return "\n".join(lines) + "\n"


def _integer_rows(V):
    """Scale each row to integers; returns (rows, product of squared scales)."""
    rows, factor = [], 1
    for row in V:
        row = [Fraction(x) for x in row]
        L = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * L) for x in row])
        factor *= L * L
    return rows, factor


def _outer_products(rows):
    k = len(rows)
    n = len(rows[0]) if rows else 0
    return [[[rows[a][i] * rows[b][i] for b in range(k)] for a in range(k)] for i in range(n)]


def _degree_bound(c, k: int) -> int:
    return sum(sorted(c, reverse=True)[:k]) if k else 0


def _plain_integer_poly(rows, c, cap: int) -> dict:
    """Integer coefficients of det(sum x^{c_i} a_i a_i^T) for integer rows a."""
    k = len(rows)
    n = len(c)
    if k == 0:
        return {0: 1}
    D = _degree_bound(c, k)
    if D > cap:
        raise DegreeOverflow(f"degree {D} exceeds cap {cap}")
    outer = _outer_products(rows)
    values = []
    for x in range(1, D + 2):
        M = [[0] * k for _ in range(k)]
        for i in range(n):
            xi = x ** c[i]
            Oi = outer[i]
            for a in range(k):
                Ma, Oa = M[a], Oi[a]
                for b in range(k):
                    Ma[b] += xi * Oa[b]
        values.append(det_int(M))
    # Newton form on nodes 1..D+1 scaled by D! so every step stays integral:
    # P(x) D! = sum_j (Delta^j P(1) D!/j!) prod_{i<j} (x - 1 - i)
    diffs = []
    cur = values
    while cur:
        diffs.append(cur[0])
        cur = [cur[t + 1] - cur[t] for t in range(len(cur) - 1)]
    fact = [1]
    for j in range(1, D + 1):
        fact.append(fact[-1] * j)
    poly = [diffs[D] * (fact[D] // fact[D])]
    for j in range(D - 1, -1, -1):
        node = j + 1
        nxt = [0] * (len(poly) + 1)
        for e, a in enumerate(poly):
            nxt[e + 1] += a
            nxt[e] -= node * a
        nxt[0] += diffs[j] * (fact[D] // fact[j])
        poly = nxt
    out = {}
    for e, v in enumerate(poly):
        if v:
            a, r = divmod(v, fact[D])
            if r:
                raise ArithmeticError("non-integral interpolated coefficient")
            out[e] = a
    return out


def basis_cost_polynomial(V, c, cap: int = DEFAULT_DEGREE_CAP) -> dict:
    """Exponent -> coefficient map of det(sum_i x^{c_i} v_i v_i^T).

    Coefficients equal the sum of det(V_S)^2 over bases S of that cost.
    """
    V = V.V if isinstance(V, LinearMatroid) else V
    c = [int(x) for x in c]
    if any(x < 0 for x in c):
        raise ValueError("costs must be nonnegative")
    rows, factor = _integer_rows(V)
    poly = _plain_integer_poly(rows, c, cap)
    return {e: Fraction(v, factor) for e, v in sorted(poly.items())}


def matroid_separate_plain(V, c, Z, cap: int = DEFAULT_DEGREE_CAP):
    """Smallest basis cost outside Z, or EXHAUSTED."""
    V = V.V if isinstance(V, LinearMatroid) else V
    rows, _ = _integer_rows(V)
    poly = _plain_integer_poly(rows, [int(x) for x in c], cap)
    Z = set(Z)
    for e in sorted(poly):
        if e not in Z:
            return e
    return EXHAUSTED


def _contract(rows, j):
    """Quotient representation after selecting column j (rows are integers)."""
    piv = next(r for r in range(len(rows)) if rows[r][j])
    p = rows[piv]
    out = []
    for r, row in enumerate(rows):
        if r == piv:
            continue
        f = row[j]
        out.append([p[j] * a - f * b for a, b in zip(row, p)] if f else list(row))
    return [[x for t, x in enumerate(row) if t != j] for row in out]


def _drop(rows, j):
    return [[x for t, x in enumerate(row) if t != j] for row in rows]


def _self_reduce(rows, c, target, has_support, modulus=None) -> list:
    """Generic witness search by deletion/contraction.

    `has_support(rows, costs, target)` reports whether some basis of the
    current minor has cost `target` (exactly, or modulo `modulus`).
    Returns original element indices.
    """
    elems = list(range(len(c)))
    costs = list(c)
    chosen = []
    while elems:
        if not rows:  # rank exhausted: remaining elements must all go
            break
        j = 0
        rows_del = _drop(rows, j)
        costs_del = costs[1:]
        if len(costs_del) >= len(rows) and has_support(rows_del, costs_del, target):
            rows, costs = rows_del, costs_del
            elems = elems[1:]
            continue
        if rows and all(row[j] == 0 for row in rows):
            raise WitnessNotFound("loop element cannot be selected")
        chosen.append(elems[0])
        target = target - costs[0]
        if modulus is not None:
            target %= modulus
        rows = _contract(rows, j)
        costs = costs[1:]
        elems = elems[1:]
    if rows:
        raise WitnessNotFound("ran out of elements before reaching full rank")
    return chosen


def witness_basis(V, c, t: int, cap: int = DEFAULT_DEGREE_CAP) -> frozenset:
    """A basis of cost exactly t, found by self-reduction over exact polynomials."""
    Vm = V if isinstance(V, LinearMatroid) else LinearMatroid(V)
    rows, _ = _integer_rows(Vm.V)
    c = [int(x) for x in c]

    def has(rws, cs, tgt):
        if tgt < 0:
            return False
        return tgt in _plain_integer_poly(rws, cs, cap) if rws else tgt == 0

    if not has(rows, c, t):
        raise WitnessNotFound(f"cost {t} not attained")
    S = frozenset(_self_reduce(rows, c, t, has))
    if not Vm.is_basis(S) or sum(c[i] for i in S) != t:
        raise WitnessNotFound("self-reduction produced an invalid basis")
    return S


# -- modular evaluation -------------------------------------------------------

class _ModpContext:
    def __init__(self, p: int, q: int, omega: int):
        self.p, self.q, self.omega = p, q, omega
        self.pows = [pow(omega, e, q) for e in range(p)]
        self.p_inv = pow(p, q - 2, q)

    def evaluations(self, rows, c) -> list:
        """P(omega^j) mod q for j = 0..p-1."""
        p, q = self.p, self.q
        k = len(rows)
        if k == 0:
            return [1] * p
        groups = {}
        for i, ci in enumerate(c):
            r = ci % p
            G = groups.setdefault(r, [[0] * k for _ in range(k)])
            for a in range(k):
                ra = rows[a][i]
                if ra:
                    Ga = G[a]
                    for b in range(k):
                        Ga[b] += ra * rows[b][i]
        groups = [(r, [[x % q for x in row] for row in G]) for r, G in groups.items()]
        vals = []
        for j in range(p):
            M = [[0] * k for _ in range(k)]
            for r, G in groups:
                f = self.pows[(j * r) % p]
                for a in range(k):
                    Ma, Ga = M[a], G[a]
                    for b in range(k):
                        Ma[b] += f * Ga[b]
            vals.append(det_mod(M, q))
        return vals

    def coefficient(self, vals, r: int) -> int:
        """Coefficient of x^r in P mod (x^p - 1) over F_q."""
        p, q = self.p, self.q
        s = 0
        for j, v in enumerate(vals):
            if v:
                s += v * self.pows[(-j * r) % p]
        return s % q * self.p_inv % q


def _random_field(p: int, rng: random.Random):
    """Random prime q = 1 (mod p) in [2^60, 2^62) and a primitive p-th root of unity."""
    lo, hi = 1 << 60, 1 << 62
    while True:
        m = rng.randrange(lo // p + 1, hi // p)
        q = m * p + 1
        if q >= hi or not isprime(q):
            continue
        while True:
            g = rng.randrange(2, q - 1)
            omega = pow(g, (q - 1) // p, q)
            if omega != 1:
                return q, omega


def _primes():
    yield 2
    p = 3
    while True:
        if isprime(p):
            yield p
        p += 2


def prime_scan_limit(ell: int, n: int, M: int) -> int:
    """Number of primes scanned before exhaustion is declared."""
    return 4 * ell * ell * math.ceil(math.log2(n * M + 2)) + 16


def matroid_separate_modp(V, c, Z, rng: random.Random | None = None, seed=None,
                          retries: int = 8, stats: dict | None = None):
    """Basis cost outside Z found through residues mod x^p - 1, or EXHAUSTED.

    Every returned value is the exact cost of a basis verified by
    determinant, so a vanishing coefficient mod q can only cause a retry,
    never a wrong answer.  Exhaustion is declared when the scanned primes
    rule out every cost outside Z: either one prime exceeds the width of the
    cost range, or their product exceeds prod |t - z| for every admissible
    t, or the fixed scan limit is reached.
    """
    Vm = V if isinstance(V, LinearMatroid) else LinearMatroid(V)
    rng = rng or random.Random(seed)
    rows, _ = _integer_rows(Vm.V)
    c = [int(x) for x in c]
    if any(x < 0 for x in c):
        raise ValueError("costs must be nonnegative")
    k = Vm.k
    max_cost = _degree_bound(c, k)
    min_cost = sum(sorted(c)[:k])
    # values no basis can reach never matter
    Z = sorted(z for z in set(int(z) for z in Z) if min_cost <= z <= max_cost)
    ell = len(Z)
    M = max([abs(x) for x in c] + [1])
    limit = prime_scan_limit(ell, Vm.n, M)
    if stats is None:
        stats = {}
    stats.setdefault("primes", 0)
    stats.setdefault("retries", 0)

    # log of the largest possible |t - z| over admissible t
    span = max(max_cost - min_cost, 1)
    log_needed = ell * math.log(span)
    log_acc = 0.0
    any_distinct = False
    for count, p in enumerate(_primes(), start=1):
        stats["primes"] = count
        zres = {z % p for z in Z}
        distinct = len(zres) == ell
        any_distinct = any_distinct or distinct
        if len(zres) < p:
            found = _try_prime(Vm, rows, c, zres, p, rng, retries, stats)
            if found is not None:
                return found
        log_acc += math.log(p)
        if p > max_cost - min_cost or (ell and log_acc > log_needed):
            return EXHAUSTED
        if count >= limit:
            if not any_distinct:
                raise NoSuitablePrime(f"no prime among the first {limit} separates Z")
            return EXHAUSTED


def _try_prime(Vm, rows, c, zres, p, rng, retries, stats):
    for attempt in range(retries):
        q, omega = _random_field(p, rng)
        ctx = _ModpContext(p, q, omega)
        vals = ctx.evaluations(rows, c)
        target = None
        for r in range(p):
            if r in zres:
                continue
            if ctx.coefficient(vals, r):
                target = r
                break
        if target is None:
            # support residues all inside zres (with high probability)
            return None

        def has(rws, cs, tgt, ctx=ctx):
            if not rws:
                return tgt % p == 0
            return ctx.coefficient(ctx.evaluations(rws, cs), tgt % p) != 0

        try:
            S = frozenset(_self_reduce(rows, c, target, has, modulus=p))
        except WitnessNotFound:
            stats["retries"] += 1
            continue
        cost = sum(c[i] for i in S)
        if Vm.is_basis(S) and cost % p == target:
            stats["witness"] = S
            return cost
        stats["retries"] += 1
    raise ModpFailure(f"certification failed {retries} times at p={p}")


def matroid_separate(V, c, Z, cap: int = DEFAULT_DEGREE_CAP, rng=None):
    """Plain mode when the degree fits under the cap, modular otherwise."""
    V = V.V if isinstance(V, LinearMatroid) else V
    k = len(V)
    if _degree_bound([int(x) for x in c], k) <= cap:
        return matroid_separate_plain(V, c, Z, cap)
    return matroid_separate_modp(V, c, Z, rng=rng)


class MatroidSeparator:
    """GSL separator over bases of a linear matroid.

    Columns of the orthogonal lattice basis W are packed into scalars, so a
    basis whose packed cost avoids the representatives' packed costs has
    W 1_S different from every W r_i.
    """

    def __init__(self, matroid: LinearMatroid, cap: int = DEFAULT_DEGREE_CAP, seed=None):
        self.matroid = matroid
        self.cap = cap
        self.rng = random.Random(seed)
        self.stats: dict = {"calls": 0, "modp": 0}

    def __call__(self, state):
        mat = self.matroid
        n = mat.n
        if not state.buckets:
            S = mat.greedy_last_basis()
            return tuple(1 if i in S else 0 for i in range(n))
        self.stats["calls"] += 1
        W = state.W
        s = len(W)
        if s == 0:
            return None
        M = max([abs(x) for row in W for x in row] + [1])
        cols = [tuple(row[i] for row in W) for i in range(n)]
        g = [scalar_encode(col, n, M, s) for col in cols]
        Z = {sum(g[i] for i in range(n) if r[i]) for r in (b.representative for b in state.buckets)}
        if _degree_bound(g, mat.k) <= self.cap:
            t = matroid_separate_plain(mat, g, Z, self.cap)
            if t is EXHAUSTED:
                return None
            S = witness_basis(mat, g, t, self.cap)
        else:
            self.stats["modp"] += 1
            info: dict = {}
            t = matroid_separate_modp(mat, g, Z, rng=self.rng, stats=info)
            if t is EXHAUSTED:
                return None
            S = info["witness"]
        return tuple(1 if i in S else 0 for i in range(n))


def gsl_matroid_separator(matroid: LinearMatroid, cap: int = DEFAULT_DEGREE_CAP, seed=None):
    return MatroidSeparator(matroid, cap=cap, seed=seed)
