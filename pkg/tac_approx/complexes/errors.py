class ComplexError(Exception):
    """Base class for all chain complex errors."""


class InvalidComplexError(ComplexError):
    """Consecutive differentials do not compose to zero."""


class WindowMismatchError(ComplexError):
    """Windows of complexes or maps do not fit together."""


class ShapeMismatchError(ComplexError):
    """Ranks of complexes and map components disagree."""


class UnboundedComplexError(ComplexError):
    """A bounded complex was required."""


class NotSurjectiveError(ComplexError):
    """A map required to be surjective modulo the maximal ideal is not."""
