"""Exception types shared across the toolkit."""


class CmpOptError(Exception):
    pass


class InfeasibleQuery(CmpOptError):
    """An operand of a query is not in the feasible family."""


class NotEnumerable(CmpOptError):
    pass


class DimensionMismatch(CmpOptError):
    pass


class EmptyPointSet(CmpOptError):
    pass


class UnsortedInput(CmpOptError):
    pass


class SeparatorInconsistent(CmpOptError):
    """The separator returned a point whose class was already inferable."""


class OutOfRange(CmpOptError):
    pass


class DegreeOverflow(CmpOptError):
    pass


class ModpFailure(CmpOptError):
    pass


class NoSuitablePrime(CmpOptError):
    pass


class WitnessNotFound(CmpOptError):
    pass


class TrivialCut(CmpOptError):
    """A cut query used the empty set or the whole vertex set."""


class NoSignChange(CmpOptError):
    pass


class TooFewVertices(CmpOptError):
    pass


class IsolatedVertex(CmpOptError):
    pass


class Unidentifiable(CmpOptError):
    """The hidden graph cannot be pinned down by cut comparisons."""


class NotEnoughEdges(CmpOptError):
    pass


class ScaleExceeded(CmpOptError):
    pass


class NotAMatroid(CmpOptError):
    pass


class DifferentComponents(CmpOptError):
    pass


class NotCommonIndependent(CmpOptError):
    pass


class Unreachable(CmpOptError):
    pass


class ConfigError(CmpOptError):
    pass
