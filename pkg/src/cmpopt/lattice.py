"""Exact linear algebra: integer kernels, rational spans, determinants."""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def _xgcd(a: int, b: int):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def integer_nullspace(A, n: int | None = None) -> list:
    """Basis of {x in Z^n : A x = 0} by unimodular column reduction.

    The columns of an identity block ride along with the column operations
    that bring A into lower echelon form; the identity columns sitting under
    zero columns of the reduced A form a saturated kernel basis.
    """
    A = [list(map(int, row)) for row in A]
    if n is None:
        if not A:
            raise ValueError("n is required for an empty matrix")
        n = len(A[0])
    m = len(A)
    cols = [[A[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    rank = 0
    for i in range(m):
        if rank == n:
            break
        for j in range(rank + 1, n):
            b = cols[j][i]
            if b == 0:
                continue
            a = cols[rank][i]
            if a == 0:
                cols[rank], cols[j] = cols[j], cols[rank]
                continue
            g, s, t = _xgcd(a, b)
            ag, bg = a // g, b // g
            cr, cj = cols[rank], cols[j]
            cols[rank] = [s * x + t * y for x, y in zip(cr, cj)]
            cols[j] = [-bg * x + ag * y for x, y in zip(cr, cj)]
        if cols[rank][i] != 0:
            rank += 1
    basis = []
    for j in range(rank, n):
        v = cols[j][m:]
        g = 0
        for x in v:
            g = gcd(g, x)
        basis.append([x // g for x in v] if g > 1 else v)
    return _size_reduce(basis)


def _size_reduce(basis: list) -> list:
    """Cheap pairwise reduction to keep kernel entries small (lattice unchanged)."""
    basis = [list(v) for v in basis]
    changed = True
    rounds = 0
    while changed and rounds < 50:
        changed = False
        rounds += 1
        basis.sort(key=lambda v: sum(x * x for x in v))
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                u, v = basis[i], basis[j]
                uu = sum(x * x for x in u)
                if uu == 0:
                    continue
                q = round(Fraction(sum(x * y for x, y in zip(u, v)), uu))
                if q:
                    w = [y - q * x for x, y in zip(u, v)]
                    if sum(x * x for x in w) < sum(x * x for x in v):
                        basis[j] = w
                        changed = True
    return basis


def mat_vec(W, x) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in W)


class RationalSubspace:
    """Span of integer vectors with exact membership tests.

    Keeps the original generators (for export) and a reduced echelon copy
    over the rationals (for tests of membership and independence).
    """

    def __init__(self, n: int):
        self.n = n
        self.basis: list = []
        self._rows: list = []  # (pivot column, row with 1 at pivot)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v) -> list:
        r = [Fraction(x) for x in v]
        for p, row in self._rows:
            if r[p]:
                c = r[p]
                r = [a - c * b for a, b in zip(r, row)]
        return r

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def add(self, v) -> bool:
        r = self.reduce(v)
        piv = next((i for i, x in enumerate(r) if x), None)
        if piv is None:
            return False
        c = r[piv]
        r = [x / c for x in r]
        new_rows = []
        for p, row in self._rows:
            if row[piv]:
                k = row[piv]
                row = [a - k * b for a, b in zip(row, r)]
            new_rows.append((p, row))
        new_rows.append((piv, r))
        self._rows = new_rows
        self.basis.append(tuple(int(x) for x in v))
        return True


def rank(M) -> int:
    rows = [[Fraction(x) for x in row] for row in M]
    if not rows:
        return 0
    r = 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def det_int(M) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in M]
    sgn, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return 0
            A[k], A[sw] = A[sw], A[k]
            sgn = -sgn
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
        prev = akk
    return sgn * A[n - 1][n - 1]


def det_frac(M) -> Fraction:
    """Exact determinant of a rational matrix."""
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / M[c][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return det


def det_mod(M, q: int) -> int:
    """Determinant modulo a prime q; cross-multiplied elimination, one inverse."""
    A = [[x % q for x in row] for row in M]
    n = len(A)
    det, scale = 1, 1
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        Ac = A[c]
        a = Ac[c]
        det = det * a % q
        for i in range(c + 1, n):
            Ai = A[i]
            b = Ai[c]
            if b:
                scale = scale * a % q
                A[i] = [(a * x - b * y) % q for x, y in zip(Ai, Ac)]
    return det * pow(scale, q - 2, q) % q
