from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime

from .errors import AlgebraError, NotInvertibleError

DEFAULT_MODULUS = 32003


def check_modulus(modulus: int) -> int:
    """Return the modulus if it is a prime, raise otherwise."""
    if not isprime(modulus):
        msg = f"Field characteristic must be a prime; got {modulus}"
        raise AlgebraError(msg)

    return modulus


def inverse(value: int, modulus: int) -> int:
    """Multiplicative inverse of `value` modulo a prime `modulus`."""
    value %= modulus
    if value == 0:
        msg = "Zero is not invertible"
        raise NotInvertibleError(msg)

    return pow(value, -1, modulus)


def symmetric(value: int, modulus: int) -> int:
    """Representative of `value` in the range `(-modulus/2, modulus/2]`, used for printing."""
    value %= modulus
    return value - modulus if value > modulus // 2 else value


@dataclass(frozen=True)
class FieldElement:
    """Element of the prime field with `modulus` elements.

    Examples:
        >>> a = FieldElement(3, 7)
        >>> (a * a.inverse()).residue
        1
        >>> int(FieldElement(-1, 7))
        6
    """

    residue: int
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self) -> None:
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                msg = f"Cannot combine elements of characteristic {self.modulus} and {other.modulus}"
                raise AlgebraError(msg)

            return other.residue

        return other % self.modulus

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.residue + self._coerce(other), self.modulus)

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.residue - self._coerce(other), self.modulus)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.residue * self._coerce(other), self.modulus)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.residue * inverse(self._coerce(other), self.modulus), self.modulus)

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.residue, self.modulus)

    def __int__(self) -> int:
        return self.residue

    def __bool__(self) -> bool:
        return self.residue != 0

    def inverse(self) -> FieldElement:
        """Multiplicative inverse."""
        return FieldElement(inverse(self.residue, self.modulus), self.modulus)

    def __str__(self) -> str:
        return str(symmetric(self.residue, self.modulus))
