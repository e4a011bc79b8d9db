"""Global subspace learning: sort every feasible set by learning weight classes.

The state keeps one bucket per weight class seen so far and the span A of
same-weight differences.  A feasible x is known to share the weight of
bucket i exactly when x - r_i lies in A, which is tested by comparing W x
with W r_i for an integer basis W of the orthogonal complement.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import SeparatorInconsistent
from .lattice import RationalSubspace, integer_nullspace, mat_vec
from .oracle import from_indicator


@dataclass
class Bucket:
    members: list = field(default_factory=list)

    @property
    def representative(self) -> tuple:
        return self.members[0]


class GslState:
    """Buckets plus the learned subspace.

    `order` lists bucket ids by increasing weight; it is None for the
    equality-only variant, where buckets are known only as a partition.
    """

    def __init__(self, n: int, ordered: bool = True):
        self.n = n
        self.buckets: list[Bucket] = []
        self.subspace = RationalSubspace(n)
        self.order: list | None = [] if ordered else None
        self.steps = 0
        self.potentials: list = []
        self._W: list | None = None
        self._keys: dict = {}

    @property
    def ordered(self) -> bool:
        return self.order is not None

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def potential(self) -> int:
        return self.dim + len(self.buckets)

    # -- classification ------------------------------------------------

    @property
    def W(self) -> list:
        """Integer basis of the orthogonal complement of A, as rows."""
        if self._W is None:
            self._W = integer_nullspace(self.subspace.basis, self.n) if self.subspace.basis \
                else [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        return self._W

    def key(self, x) -> tuple:
        return mat_vec(self.W, x)

    def _rebuild_keys(self):
        self._W = None
        self._keys = {self.key(b.representative): bid for bid, b in enumerate(self.buckets)}

    def rep_keys(self) -> list:
        return [self.key(b.representative) for b in self.buckets]

    def bucket_of(self, x):
        """Bucket id with x - r_i in A, or None."""
        return self._keys.get(self.key(x))

    def rank_of(self, bid: int) -> int:
        return self.order.index(bid) if self.order is not None else bid

    def in_span(self, x, bid: int) -> bool:
        r = self.buckets[bid].representative
        return self.subspace.contains([a - b for a, b in zip(x, r)])

    # -- updates -------------------------------------------------------

    def _join(self, bid: int, y: tuple):
        r = self.buckets[bid].representative
        diff = tuple(a - b for a, b in zip(y, r))
        if not self.subspace.add(diff):
            raise SeparatorInconsistent(f"{y} already inferable")
        self.buckets[bid].members.append(y)
        self._rebuild_keys()

    def _open(self, pos: int | None, y: tuple):
        self.buckets.append(Bucket([y]))
        bid = len(self.buckets) - 1
        if self.order is not None:
            self.order.insert(pos, bid)
        self._keys[self.key(y)] = bid

    # -- export --------------------------------------------------------

    def to_json(self) -> str:
        data = {
            "n": self.n,
            "buckets": [[list(m) for m in b.members] for b in self.buckets],
            "basis": [list(v) for v in self.subspace.basis],
            "order": self.order,
        }
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "GslState":
        data = json.loads(text)
        st = cls(data["n"], ordered=data["order"] is not None)
        st.buckets = [Bucket([tuple(m) for m in ms]) for ms in data["buckets"]]
        for v in data["basis"]:
            st.subspace.add(v)
        st.order = data["order"]
        st._rebuild_keys()
        return st


def classify(state: GslState, x):
    """Rank of the bucket x provably belongs to, or "unknown"."""
    bid = state.bucket_of(tuple(x))
    if bid is None:
        return "unknown"
    return state.rank_of(bid)


def potential(state: GslState) -> int:
    return state.potential()


class EnumerationSeparator:
    """Scan the family in lexicographic indicator order for an unclassified set.

    Classified sets stay classified, so a single forward pointer suffices.
    """

    def __init__(self, family):
        self.points = sorted(family.indicator(S) for S in family.enumerate())
        self._pos = 0

    def __call__(self, state: GslState):
        while self._pos < len(self.points):
            x = self.points[self._pos]
            if state.bucket_of(x) is None:
                return x
            self._pos += 1
        return None


def _binary_search(state: GslState, y_set, oracle):
    lo, hi = 0, len(state.order)
    while lo < hi:
        mid = (lo + hi) // 2
        bid = state.order[mid]
        s = oracle.compare(y_set, from_indicator(state.buckets[bid].representative))
        if s == 0:
            return bid, None
        if s < 0:
            hi = mid
        else:
            lo = mid + 1
    return None, lo


def _run(family, oracle, separator, ordered: bool, max_steps: int | None):
    n = family.n
    if separator is None:
        separator = EnumerationSeparator(family)
    state = GslState(n, ordered=ordered)
    if max_steps is None and oracle.bound is not None:
        max_steps = 2 * n * oracle.bound + n
    while True:
        y = separator(state)
        if y is None:
            break
        y = tuple(int(v) for v in y)
        if state.bucket_of(y) is not None:
            raise SeparatorInconsistent(f"{y} lies in a known class")
        before = state.potential()
        y_set = from_indicator(y)
        if ordered:
            bid, pos = _binary_search(state, y_set, oracle)
        else:
            bid, pos = None, None
            for cand, b in enumerate(state.buckets):
                if oracle.compare_equality(y_set, from_indicator(b.representative)):
                    bid = cand
                    break
        if bid is None:
            state._open(pos, y)
        else:
            state._join(bid, y)
        state.steps += 1
        after = state.potential()
        if after != before + 1:
            raise RuntimeError(f"potential moved from {before} to {after}")
        state.potentials.append(after)
        if max_steps is not None and state.steps > max_steps:
            raise RuntimeError(f"exceeded {max_steps} separation steps")
    return state


def gsl_run(family, oracle, separator=None, max_steps: int | None = None) -> GslState:
    """Sort the family's weight classes with comparisons.

    `separator(state)` returns an indicator outside every known class, or
    None once all feasible sets are classified.  Without one the family is
    enumerated.
    """
    return _run(family, oracle, separator, True, max_steps)


def gsl_run_equality_only(family, oracle, separator=None, max_steps: int | None = None) -> GslState:
    """Same partition using only equality queries; buckets come out unordered."""
    return _run(family, oracle, separator, False, max_steps)


def comparison_bound(n: int, B: int) -> int:
    """Per-point binary-search cost ceil(log2(2nB + 1))."""
    return math.ceil(math.log2(2 * n * B + 1)) if 2 * n * B + 1 > 1 else 0
