"""Exception types shared across the package."""


class ConvexCountError(Exception):
    """Base class for all package errors."""


class PoleError(ConvexCountError, ZeroDivisionError):
    """A Pochhammer symbol in a denominator vanished."""


class FeasibilityError(ConvexCountError):
    """A brute-force request exceeds the configured size bound."""


class HypothesisError(ConvexCountError, ValueError):
    """Arguments violate the hypotheses of a counting formula."""


class DecompositionError(ConvexCountError, ValueError):
    """A polyomino or a set of boundary paths is not a valid instance."""
