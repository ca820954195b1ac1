"""Exception types shared across the package."""


class GroupCalcError(Exception):
    """Base class for all groupcalc errors."""


class DomainError(GroupCalcError, ValueError):
    """An argument left the operational domain of a group class."""


class ConvergenceError(GroupCalcError, RuntimeError):
    """An iterative routine (root finding, eigensolver) did not converge."""


class ToleranceNotMet(GroupCalcError, RuntimeError):
    """Adaptive quadrature hit its depth limit before reaching tolerance."""


class ParseError(GroupCalcError, ValueError):
    """Expression could not be parsed.

    Attributes:
        offset: byte offset of the failure in the source text.
        expected: tuple of token descriptions that would have been accepted.
    """

    def __init__(self, message, offset, expected=()):
        super().__init__(message)
        self.offset = offset
        self.expected = tuple(expected)
