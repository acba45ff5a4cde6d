"""Exception types raised by ordpoly."""


class PolytopeError(Exception):
    """Base class for all ordpoly errors."""


class BadParams(PolytopeError, ValueError):
    """Parameters fall outside the range where a construction or formula is defined."""


class DuplicateFacet(PolytopeError, ValueError):
    pass


class NotGraded(PolytopeError):
    """Maximal chains of a poset have unequal lengths."""


class NotComparable(PolytopeError, ValueError):
    pass


class NotAntiIso(PolytopeError):
    """A candidate duality map failed to reverse inclusion."""


class NotEulerian(PolytopeError):
    pass


class OddSize(PolytopeError, ValueError):
    pass


class FacetCountMismatch(PolytopeError):
    """Generated facets disagree with the closed-form facet count."""


class NotSubset(PolytopeError, ValueError):
    pass


class NonIntegerResult(PolytopeError, ArithmeticError):
    pass


class CyclicCase(PolytopeError, ValueError):
    """The (k-1)-modular colouring does not apply because n == k."""


class NotEdge(PolytopeError):
    pass


class Disconnected(PolytopeError):
    pass


class RankDeficient(PolytopeError):
    def __init__(self, rank, expected):
        super().__init__(f"rank {rank} < {expected}")
        self.rank = rank
        self.expected = expected


class AppendixFormatUnavailable(PolytopeError):
    """Digit-string output needs single-digit vertex labels."""


class ParseError(PolytopeError, ValueError):
    pass
