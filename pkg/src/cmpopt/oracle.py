"""Hidden weights, feasible families and the query-accounting comparison oracle.

Solvers only ever see a `ComparisonOracle`; the weights behind it are read
directly only by verification code in tests and experiment harnesses.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import InfeasibleQuery, NotEnumerable

COMPARE = "compare"
EQUALITY = "equality"
CONSTANT = "constant"


def sign(x) -> int:
    return (x > 0) - (x < 0)


def as_set(S) -> frozenset:
    return S if isinstance(S, frozenset) else frozenset(S)


def indicator(S, n: int) -> tuple:
    return tuple(1 if i in S else 0 for i in range(n))


def from_indicator(x) -> frozenset:
    return frozenset(i for i, xi in enumerate(x) if xi)


@dataclass(frozen=True)
class HiddenWeights:
    w: tuple
    bound: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(Fraction(v) for v in self.w))
        if self.bound is not None:
            for v in self.w:
                if v.denominator != 1 or abs(v) > self.bound:
                    raise ValueError(f"weight {v} violates integer bound {self.bound}")

    @classmethod
    def integer(cls, values, B: int) -> "HiddenWeights":
        return cls(tuple(values), bound=B)

    @property
    def n(self) -> int:
        return len(self.w)

    def weight(self, S) -> Fraction:
        return sum((self.w[i] for i in S), Fraction(0))

    def dot(self, x) -> Fraction:
        return sum((wi * xi for wi, xi in zip(self.w, x)), Fraction(0))


class FeasibleFamily:
    """Abstract set system over the ground set {0, ..., n-1}."""

    n: int

    def contains(self, S) -> bool:
        raise NotImplementedError

    def enumerate(self) -> Iterator[frozenset]:
        raise NotEnumerable(type(self).__name__)

    def indicator(self, S) -> tuple:
        return indicator(S, self.n)


class PowerSetFamily(FeasibleFamily):
    def __init__(self, n: int):
        self.n = n

    def contains(self, S) -> bool:
        return all(0 <= i < self.n for i in S)

    def enumerate(self):
        for r in range(self.n + 1):
            for c in itertools.combinations(range(self.n), r):
                yield frozenset(c)


class KSubsetFamily(FeasibleFamily):
    def __init__(self, n: int, k: int):
        self.n, self.k = n, k

    def contains(self, S) -> bool:
        return len(S) == self.k and all(0 <= i < self.n for i in S)

    def enumerate(self):
        for c in itertools.combinations(range(self.n), self.k):
            yield frozenset(c)


class ExplicitFamily(FeasibleFamily):
    def __init__(self, n: int, sets: Iterable):
        self.n = n
        self.sets = list(dict.fromkeys(as_set(S) for S in sets))
        self._members = set(self.sets)

    def contains(self, S) -> bool:
        return as_set(S) in self._members

    def enumerate(self):
        return iter(self.sets)


class PredicateFamily(FeasibleFamily):
    def __init__(self, n: int, predicate: Callable, enumerator: Callable | None = None):
        self.n = n
        self._pred = predicate
        self._enum = enumerator

    def contains(self, S) -> bool:
        return bool(self._pred(as_set(S)))

    def enumerate(self):
        if self._enum is None:
            raise NotEnumerable("predicate family without enumerator")
        return iter(self._enum())


@dataclass
class QueryRecord:
    kind: str
    lhs: object
    rhs: object
    answer: int
    index: int


def _serialize_operand(x):
    if isinstance(x, (frozenset, set)):
        return sorted(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, tuple):
        return [_serialize_operand(v) for v in x]
    return x


@dataclass
class QueryLedger:
    counts: dict = field(default_factory=dict)
    transcript: list = field(default_factory=list)
    record: bool = True

    def log(self, kind: str, lhs, rhs, answer: int) -> None:
        self.counts[kind] = self.counts.get(kind, 0) + 1
        if self.record:
            self.transcript.append(QueryRecord(kind, lhs, rhs, answer, len(self.transcript)))

    def count(self, kind: str) -> int:
        return self.counts.get(kind, 0)

    @property
    def count_compare(self) -> int:
        return self.count(COMPARE)

    @property
    def count_equality(self) -> int:
        return self.count(EQUALITY)

    @property
    def count_constant(self) -> int:
        return self.count(CONSTANT)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def snapshot(self) -> dict:
        return dict(sorted(self.counts.items()))

    def to_jsonl(self) -> str:
        lines = []
        for r in self.transcript:
            rec = {"kind": r.kind, "lhs": _serialize_operand(r.lhs),
                   "rhs": _serialize_operand(r.rhs), "answer": r.answer, "index": r.index}
            lines.append(json.dumps(rec, sort_keys=True))
        return "\n".join(lines) + ("\n" if lines else "")

    def write_jsonl(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_jsonl())


class ComparisonOracle:
    """Answers sign-of-difference queries between feasible sets."""

    def __init__(self, family: FeasibleFamily, weights: HiddenWeights, ledger: QueryLedger | None = None):
        if family.n != weights.n:
            raise ValueError("family and weights disagree on ground size")
        self.family = family
        self._weights = weights
        self.ledger = ledger if ledger is not None else QueryLedger()

    @property
    def n(self) -> int:
        return self.family.n

    @property
    def bound(self):
        return self._weights.bound

    def _check(self, *sets) -> list:
        out = []
        for S in sets:
            S = as_set(S)
            if not self.family.contains(S):
                raise InfeasibleQuery(sorted(S))
            out.append(S)
        return out

    def compare(self, S, T) -> int:
        S, T = self._check(S, T)
        ans = sign(self._weights.weight(S) - self._weights.weight(T))
        self.ledger.log(COMPARE, S, T, ans)
        return ans

    def compare_equality(self, S, T) -> bool:
        S, T = self._check(S, T)
        ans = self._weights.weight(S) == self._weights.weight(T)
        self.ledger.log(EQUALITY, S, T, int(ans))
        return ans

    def compare_constant(self, S, t) -> int:
        (S,) = self._check(S)
        t = Fraction(t)
        ans = sign(self._weights.weight(S) - t)
        self.ledger.log(CONSTANT, S, t, ans)
        return ans

    def equals_constant(self, S, t) -> bool:
        """Equality test against a constant; counted as an equality query."""
        (S,) = self._check(S)
        t = Fraction(t)
        ans = self._weights.weight(S) == t
        self.ledger.log(EQUALITY, S, t, int(ans))
        return ans

    def reveal(self) -> HiddenWeights:
        """Ground truth for verification code; solvers must not call this."""
        return self._weights


def brute_force_argmin(family: FeasibleFamily, weights: HiddenWeights) -> frozenset:
    best, best_key = None, None
    for S in family.enumerate():
        key = (weights.weight(S), indicator(S, family.n))
        if best_key is None or key < best_key:
            best, best_key = S, key
    if best is None:
        raise NotEnumerable("family is empty")
    return best
