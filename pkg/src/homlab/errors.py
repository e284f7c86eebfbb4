"""Exception types shared across the package.

Operations that can legitimately find nothing (no homomorphism, no
dismantling sequence, no conjugator) return ``None`` instead of raising.
"""

from __future__ import annotations


class HomlabError(Exception):
    """Base class for all package errors."""


class NotACycle(HomlabError):
    pass


class EvenCycle(HomlabError):
    pass


class NoSuchEdge(HomlabError):
    pass


class InvalidDismantling(HomlabError):
    pass


class NotDismantlable(HomlabError):
    pass


class WrongHost(HomlabError):
    pass


class NotClosed(HomlabError):
    pass


class EmptyWord(HomlabError):
    pass


class NotAnArc(HomlabError):
    pass


class InvalidHom(HomlabError):
    pass


class SearchTimeout(HomlabError):
    pass


class OutOfRadius(HomlabError):
    """A lift or transform left the truncated part of a cover.

    Not fatal: callers usually retry with a larger radius.
    """


class RootMismatch(HomlabError):
    pass


class TrivialWinding(HomlabError):
    pass


class IndeterminateAtBoundary(HomlabError):
    pass


class NotInEpsilon(HomlabError):
    pass


class ModeError(HomlabError):
    pass


class ConsistencyError(HomlabError):
    """Two routes that must agree did not (indicates a bug)."""


class BudgetExceeded(HomlabError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParityMismatch(HomlabError):
    pass


class TooShort(HomlabError):
    pass


class NotConstantSlice(HomlabError):
    pass


class Bipartite(HomlabError):
    pass


class GirthTooSmall(HomlabError):
    def __init__(self, message, cycle=()):
        super().__init__(message)
        self.cycle = tuple(cycle)
