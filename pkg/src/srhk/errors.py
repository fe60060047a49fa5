"""Exception types raised across the package."""


class SRHKError(Exception):
    """Base class for every error raised by :mod:`srhk`."""


class ComplexError(SRHKError, ValueError):
    """Invalid simplicial complex or graph input."""


class EmptyComplex(ComplexError):
    pass


class GhostVertex(ComplexError):
    def __init__(self, label):
        super().__init__(f"vertex {label!r} does not lie on any facet")
        self.label = label


class DuplicateLabel(ComplexError):
    def __init__(self, label):
        super().__init__(f"vertex label {label!r} appears more than once")
        self.label = label


class NotAFace(ComplexError):
    pass


class InvalidQuery(SRHKError, ValueError):
    """A length was requested outside its domain (s < 1 or n < 0)."""


class SubsetBlowup(SRHKError):
    """Too many minimal primes for exhaustive inclusion-exclusion."""


class NotCohenMacaulay(SRHKError):
    pass


class MissingAInvariantData(SRHKError):
    """Non-Cohen-Macaulay input without the a-invariant data it needs."""


# Shorter alias used by the reduction-number helpers.
MissingAInvariant = MissingAInvariantData


class BelowValidityThreshold(SRHKError):
    pass


class FitMismatch(SRHKError):
    """Interpolated polynomial disagrees with an independently computed value."""


class DuplicateAbscissa(SRHKError, ValueError):
    pass


class BudgetExceeded(SRHKError):
    """Brute-force enumeration would exceed its configured budget."""


class ParseError(SRHKError):
    def __init__(self, line, column, reason):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


class ValidationError(SRHKError):
    pass
