"""Exception hierarchy.

Construction errors (bad tables, caps, infinite quotients) are kept apart from
parse errors because the command line maps them to different exit codes.
"""

from __future__ import annotations


class PruferLabError(Exception):
    """Base class for every error raised by this package."""


class ConstructionError(PruferLabError):
    """A ring, ideal or map could not be built."""


class AxiomViolation(ConstructionError):
    pass


class OrderLimitExceeded(ConstructionError):
    pass


class NotAnIdeal(ConstructionError):
    pass


class EmptyMultiplicativeSet(ConstructionError):
    pass


class InfiniteQuotient(ConstructionError):
    pass


class PairCapExceeded(ConstructionError):
    pass


class LatticeCapExceeded(ConstructionError):
    pass


class IsoCapExceeded(ConstructionError):
    pass


class RingMismatch(ConstructionError):
    pass


class ZeroRing(PruferLabError):
    """Deciders refuse the zero ring (1 = 0)."""


class BudgetExceeded(PruferLabError):
    def __init__(self, message: str, completed_degree: int):
        super().__init__(message)
        self.completed_degree = completed_degree


class HypothesisViolated(PruferLabError):
    pass


class ParseError(PruferLabError):
    """Base for errors in user-supplied text (exit code 2 on the command line)."""

    def __init__(self, message: str, position: int | str | None = None):
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)
        self.position = position


class PolynomialSyntaxError(ParseError):
    pass


class UnknownVariable(ParseError):
    pass


class SpecError(ParseError):
    pass


class SelfCheckFailed(PruferLabError):
    """An internal cross-check between two independent computations disagreed."""
