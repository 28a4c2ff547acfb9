class AlgebraError(Exception):
    """Base class for all algebra errors."""


class RankMismatchError(AlgebraError):
    """Vectors or matrices do not share the expected rank."""


class PolynomialParseError(AlgebraError):
    """Polynomial text could not be parsed with the ring's variables."""


class RingMismatchError(AlgebraError):
    """Operands belong to incompatible rings."""


class UnsupportedRingError(AlgebraError):
    """The ring is outside the supported classes of base rings."""


class NotInvertibleError(AlgebraError):
    """The element or matrix is not invertible."""
