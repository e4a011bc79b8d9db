"""Cut-comparison oracle over a hidden graph."""
from __future__ import annotations

from ..errors import TrivialCut
from ..oracle import COMPARE, QueryLedger, sign
from .graph import HiddenGraph, mask_of

MARGINAL = "marginal"


def _as_mask(S) -> int:
    return S if isinstance(S, int) else mask_of(S)


class CutOracle:
    """Answers sign(w(dS) - w(dT)) for nontrivial vertex sets S, T.

    Sets may be given as bitmasks or iterables of vertices.
    """

    def __init__(self, graph: HiddenGraph, ledger: QueryLedger | None = None, record: bool = False):
        self._graph = graph
        self.n = graph.n
        self.full = graph.full
        self.ledger = ledger if ledger is not None else QueryLedger(record=record)

    def _check(self, S: int) -> int:
        if S <= 0 or S == self.full or S >> self.n:
            raise TrivialCut(f"set {bin(S)} is not a proper nonempty subset")
        return S

    def compare_cuts(self, S, T) -> int:
        S, T = self._check(_as_mask(S)), self._check(_as_mask(T))
        g = self._graph
        ans = sign(g.cut_value(S) - g.cut_value(T))
        self.ledger.log(COMPARE, S, T, ans)
        return ans

    def compare_marginals(self, S, S2, T, T2) -> int:
        """sign((w(dS) - w(dS2)) - (w(dT) - w(dT2))); a stronger query kind."""
        sets = [self._check(_as_mask(X)) for X in (S, S2, T, T2)]
        g = self._graph
        a, b, c, d = (g.cut_value(X) for X in sets)
        ans = sign((a - b) - (c - d))
        self.ledger.log(MARGINAL, tuple(sets[:2]), tuple(sets[2:]), ans)
        return ans

    @property
    def queries(self) -> int:
        return self.ledger.count(COMPARE)

    def clone(self) -> "CutOracle":
        """Fresh ledger over the same immutable graph."""
        return CutOracle(self._graph, record=self.ledger.record)

    def reveal(self) -> HiddenGraph:
        """Ground truth for verification code only."""
        return self._graph
