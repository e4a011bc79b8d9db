"""Envelopes, conic independence, basic subsequences and y-certificates."""
from __future__ import annotations

import json
from fractions import Fraction

from .errors import DimensionMismatch, UnsortedInput
from .lp import cone_member


def _vec(v):
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in v)


def sub(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"{len(a)} != {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def envelope_generators(seq) -> list:
    """Consecutive differences y_{i+1} - y_i of a sequence of vectors."""
    return [sub(seq[i + 1], seq[i]) for i in range(len(seq) - 1)]


def envelope_member(sigma, x):
    """x in the cone spanned by consecutive differences of sigma."""
    if not sigma:
        raise ValueError("envelope of an empty sequence")
    if len(x) != len(sigma[0]):
        raise DimensionMismatch(f"{len(x)} != {len(sigma[0])}")
    return cone_member(x, envelope_generators(sigma))


def basic_subsequence_indices(sigma) -> list:
    """Positions kept by the greedy scan: y_t joins iff y_t - y_1 escapes envelope(kept)."""
    if not sigma:
        raise ValueError("empty sequence")
    y1 = sigma[0]
    kept = [0]
    for t in range(1, len(sigma)):
        gens = envelope_generators([sigma[i] for i in kept])
        if not cone_member(sub(sigma[t], y1), gens):
            kept.append(t)
    return kept


def basic_subsequence(sigma) -> list:
    return [sigma[i] for i in basic_subsequence_indices(sigma)]


def conically_independent(sigma) -> bool:
    if not sigma:
        raise ValueError("empty sequence")
    y1 = sigma[0]
    for t in range(1, len(sigma)):
        if cone_member(sub(sigma[t], y1), envelope_generators(sigma[:t])):
            return False
    return True


def boolean_conic_dim_bound(d: int) -> int:
    """Smallest k with 2^k > (2k+1)^d."""
    if d < 1:
        raise ValueError("d must be positive")
    k = 1
    while 2 ** k <= (2 * k + 1) ** d:
        k += 1
    return k


def extract_certificate(points, order, compare=None, spot_checks: int = 0, rng=None) -> list:
    """Index pairs (i, j) meaning x_i <= x_j, induced by B(sorted order).

    `order` lists point indices in nondecreasing weight.  When `compare` is
    given, up to `spot_checks` random adjacent pairs are re-queried and an
    inversion raises UnsortedInput.
    """
    if not order:
        return []
    if compare is not None and spot_checks and len(order) > 1:
        positions = range(len(order) - 1)
        if rng is not None:
            positions = rng.sample(list(positions), min(spot_checks, len(order) - 1))
        else:
            positions = list(positions)[:spot_checks]
        for p in positions:
            if compare(order[p], order[p + 1]) > 0:
                raise UnsortedInput(f"positions {p}, {p + 1} out of order")
    seq = [points[i] for i in order]
    kept = [order[i] for i in basic_subsequence_indices(seq)]
    return [(kept[i], kept[i + 1]) for i in range(len(kept) - 1)]


def verify_certificate(points, cert, y_index) -> bool:
    """Every point lies in y + cone{x_j - x_i : (i, j) in cert}."""
    gens = [sub(points[j], points[i]) for i, j in cert]
    y = points[y_index]
    return all(cone_member(sub(p, y), gens) for p in points)


def certificate_to_json(cert) -> str:
    return json.dumps([list(p) for p in cert])


def exhaustive_conic_dimension(points) -> int:
    """Longest conically independent sequence; brute force, tiny sets only."""
    points = [_vec(p) for p in points]
    best = 1 if points else 0

    def extend(seq, remaining):
        nonlocal best
        best = max(best, len(seq))
        for idx in remaining:
            cand = seq + [points[idx]]
            if not cone_member(sub(cand[-1], cand[0]), envelope_generators(seq)):
                extend(cand, [r for r in remaining if r != idx])

    for i in range(len(points)):
        extend([points[i]], [j for j in range(len(points)) if j != i])
    return best
