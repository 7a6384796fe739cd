"""Exception hierarchy shared by all modules."""


class HirschError(Exception):
    """Base class for every error raised by hirschkit."""


class EmptyInput(HirschError, ValueError):
    pass


class DegenerateInput(HirschError, ValueError):
    pass


class Infeasible(HirschError, ValueError):
    pass


class NotPointed(HirschError, ValueError):
    pass


class BadFacet(HirschError, ValueError):
    pass


class BadVertex(HirschError, ValueError):
    pass


class OriginNotInterior(HirschError, ValueError):
    pass


class SingularMatrix(HirschError, ValueError):
    pass


class PointAtInfinity(HirschError, ValueError):
    pass


class PolytopeMeetsInfinity(HirschError, ValueError):
    pass


class NotSimplicial(HirschError, ValueError):
    pass


class LabelClash(HirschError, ValueError):
    pass


class BadMatching(HirschError, ValueError):
    pass


class Disconnected(HirschError, ValueError):
    pass


class TieError(HirschError, ValueError):
    """A linear functional takes equal values on the two ends of an edge."""


class MatchingFailed(HirschError, RuntimeError):
    pass


class ConstructionFailed(HirschError, RuntimeError):
    pass


class InfeasibleMargins(HirschError, ValueError):
    pass


class BadInput(HirschError, ValueError):
    pass


class ParseError(HirschError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
