from __future__ import annotations

from collections.abc import Mapping
from typing import Any

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_mul
from sympy.polys.orderings import grevlex

from .errors import RingMismatchError
from .field import FieldElement, inverse

# Type aliases for readability
Monomial = tuple[int, ...]
OrderKey = tuple[Any, ...]


def monomial_key(monomial: Monomial) -> OrderKey:
    """Graded reverse lexicographic sort key; the last variable is the smallest.

    Examples:
        >>> monomial_key((0, 2, 0)) > monomial_key((1, 0, 1))  # y^2 > x*z
        True
        >>> monomial_key((1, 0)) > monomial_key((0, 1))  # x > y
        True
    """
    return grevlex(monomial)  # type: ignore[no-any-return]


class Polynomial:
    """Sparse polynomial over a prime field in a fixed number of variables.

    Instances are immutable and kept in canonical form: coefficients are residues in `[1, modulus)`
    and zero terms are never stored. The polynomial does not know its variable names; use
    `QuotientRing.format()` to render it.
    """

    __slots__ = ("_hash", "_terms", "modulus", "nvars")

    def __init__(self, terms: Mapping[Monomial, int], *, nvars: int, modulus: int) -> None:
        """Initialize a polynomial.

        Args:
            terms: Mapping of exponent vectors to coefficients; coefficients are reduced modulo `modulus`.
            nvars: Number of ambient variables.
            modulus: Characteristic of the ground field.
        """
        self.nvars = nvars
        self.modulus = modulus
        normalized = {}
        for monomial, coefficient in terms.items():
            residue = coefficient % modulus
            if residue:
                normalized[tuple(monomial)] = residue

        self._terms: dict[Monomial, int] = normalized
        self._hash: int | None = None

    # Constructors
    # ------------------------------------------------------------------------
    @classmethod
    def zero(cls, *, nvars: int, modulus: int) -> Polynomial:
        """The zero polynomial."""
        return cls({}, nvars=nvars, modulus=modulus)

    @classmethod
    def constant(cls, value: int, *, nvars: int, modulus: int) -> Polynomial:
        """Constant polynomial `value`."""
        return cls({(0,) * nvars: value}, nvars=nvars, modulus=modulus)

    @classmethod
    def monomial(cls, monomial: Monomial, coefficient: int = 1, *, modulus: int) -> Polynomial:
        """Single term `coefficient * x^monomial`."""
        return cls({monomial: coefficient}, nvars=len(monomial), modulus=modulus)

    def _new(self, terms: Mapping[Monomial, int]) -> Polynomial:
        return Polynomial(terms, nvars=self.nvars, modulus=self.modulus)

    # Inspection
    # ------------------------------------------------------------------------
    @property
    def term_dict(self) -> Mapping[Monomial, int]:
        """Read-only view of the terms."""
        return self._terms

    @property
    def terms(self) -> list[tuple[FieldElement, Monomial]]:
        """Terms sorted strictly descending by the monomial order."""
        return [
            (FieldElement(self._terms[m], self.modulus), m)
            for m in sorted(self._terms, key=monomial_key, reverse=True)
        ]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        """Whether the polynomial has no term of positive degree."""
        return all(not any(m) for m in self._terms)

    @property
    def constant_term(self) -> int:
        """Residue of the constant term."""
        return self._terms.get((0,) * self.nvars, 0)

    @property
    def degree(self) -> int:
        """Total degree; `-1` for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    @property
    def leading_monomial(self) -> Monomial:
        if not self._terms:
            msg = "Zero polynomial has no leading monomial"
            raise ValueError(msg)

        return max(self._terms, key=monomial_key)

    @property
    def leading_coefficient(self) -> int:
        return self._terms[self.leading_monomial]

    # Arithmetic
    # ------------------------------------------------------------------------
    def _check(self, other: Polynomial) -> None:
        if other.nvars != self.nvars or other.modulus != self.modulus:
            msg = "Polynomials live in different ambient rings"
            raise RingMismatchError(msg)

    def _lift(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial.constant(other, nvars=self.nvars, modulus=self.modulus)

        self._check(other)
        return other

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = self._lift(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c

        return self._new(terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return self._new({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + (-self._lift(other))

    def __rsub__(self, other: Polynomial | int) -> Polynomial:
        return self._lift(other) - self

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        other = self._lift(other)
        terms: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                terms[m] = (terms.get(m, 0) + c1 * c2) % self.modulus

        return self._new(terms)

    __rmul__ = __mul__

    def scale(self, coefficient: int) -> Polynomial:
        """Multiply by a field scalar."""
        return self._new({m: c * coefficient for m, c in self._terms.items()})

    def shift(self, monomial: Monomial, coefficient: int = 1) -> Polynomial:
        """Multiply by the single term `coefficient * x^monomial`."""
        return self._new({monomial_mul(m, monomial): c * coefficient for m, c in self._terms.items()})

    def monic(self) -> Polynomial:
        """Scale so that the leading coefficient is one."""
        return self.scale(inverse(self.leading_coefficient, self.modulus))

    def divides_monomial(self, monomial: Monomial) -> bool:
        """Whether the leading monomial divides `monomial`."""
        return bool(monomial_divides(self.leading_monomial, monomial))

    def quotient_monomial(self, monomial: Monomial) -> Monomial:
        return monomial_div(monomial, self.leading_monomial)  # type: ignore[no-any-return]

    # Comparison
    # ------------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == self._lift(other)

        if not isinstance(other, Polynomial):
            return NotImplemented

        return (self.nvars, self.modulus) == (other.nvars, other.modulus) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.modulus, frozenset(self._terms.items())))

        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({dict(self._terms)!r}, nvars={self.nvars}, modulus={self.modulus})"
