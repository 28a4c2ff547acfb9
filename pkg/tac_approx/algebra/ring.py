from __future__ import annotations

import logging
from collections.abc import Sequence
from enum import Enum
from functools import cached_property
from typing import Union

from .errors import AlgebraError, RingMismatchError
from .field import DEFAULT_MODULUS, check_modulus
from .groebner import Submodule, _Element, reduce_sparse, reduced_groebner_basis
from .parsing import format_polynomial, parse_polynomial
from .polynomial import Polynomial
from .vector import VectorElement

logger = logging.getLogger(__name__)

PolynomialLike = Union[Polynomial, str, int]


class RingClass(str, Enum):
    """Classes of base rings distinguished by the complete-resolution machinery."""

    REGULAR = "regular"
    HYPERSURFACE = "hypersurface"
    ARTINIAN = "artinian-gorenstein"
    COMPLETE_INTERSECTION = "complete-intersection"
    UNSUPPORTED = "unsupported"


class QuotientRing:
    """Presented ring `k[x_1..x_n]/I` over the prime field `k`.

    The reduced Gröbner basis of `I` is computed on first use and cached; normal forms with respect
    to it are the canonical representatives of residue classes. A ring obtained with `quotient()`
    remembers its parent and the extra generators, which generate the kernel of the projection
    from the parent.
    """

    def __init__(
        self,
        variables: Sequence[str],
        ideal: Sequence[PolynomialLike] = (),
        *,
        modulus: int = DEFAULT_MODULUS,
        name: str | None = None,
    ) -> None:
        """Initialize the ring.

        Args:
            variables: Names of the ambient variables, ordered from largest to smallest.
            ideal: Generators of the ideal, as polynomials or text.
            modulus: Characteristic of the ground field.
            name: Optional display name.
        """
        if not variables:
            msg = "A ring needs at least one variable"
            raise AlgebraError(msg)

        if len(set(variables)) != len(variables):
            msg = f"Duplicate variable names in {list(variables)}"
            raise AlgebraError(msg)

        self.variables: tuple[str, ...] = tuple(variables)
        self.modulus = check_modulus(modulus)
        self.name = name
        self.ideal: tuple[Polynomial, ...] = tuple(self._coerce(g) for g in ideal)
        self.parent: QuotientRing | None = None
        self.extra: tuple[Polynomial, ...] = ()

    def quotient(self, extra: Sequence[PolynomialLike], *, name: str | None = None) -> QuotientRing:
        """The ring `self / (extra)` with `self` recorded as parent."""
        extra_polys = [self._coerce(g) for g in extra]
        ring = QuotientRing(self.variables, [*self.ideal, *extra_polys], modulus=self.modulus, name=name)
        ring.parent = self
        ring.extra = tuple(self.reduce(g) for g in extra_polys if not self.reduce(g).is_zero())
        return ring

    def _coerce(self, value: PolynomialLike) -> Polynomial:
        if isinstance(value, Polynomial):
            if (value.nvars, value.modulus) != (self.nvars, self.modulus):
                msg = "Polynomial does not belong to this ring's ambient polynomial ring"
                raise RingMismatchError(msg)

            return value

        if isinstance(value, int):
            return Polynomial.constant(value, nvars=self.nvars, modulus=self.modulus)

        return parse_polynomial(value, self.variables, self.modulus)

    # Basic properties
    # ------------------------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def groebner_basis(self) -> tuple[Polynomial, ...]:
        """Reduced Gröbner basis of the ideal in the ambient polynomial ring."""
        vectors = [{(0, m): c for m, c in g.term_dict.items()} for g in self.ideal if not g.is_zero()]
        basis = reduced_groebner_basis(vectors, self.modulus)
        logger.debug("Gröbner basis of the ideal of %s has %d elements", self, len(basis))
        return tuple(
            Polynomial({m: c for (_, m), c in v.items()}, nvars=self.nvars, modulus=self.modulus) for v in basis
        )

    @cached_property
    def _reducers(self) -> list[_Element]:
        return [_Element({(0, m): c for m, c in g.term_dict.items()}) for g in self.groebner_basis]

    @cached_property
    def zero(self) -> Polynomial:
        return Polynomial.zero(nvars=self.nvars, modulus=self.modulus)

    @cached_property
    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, value: int) -> Polynomial:
        return Polynomial.constant(value, nvars=self.nvars, modulus=self.modulus)

    def variable(self, name: str) -> Polynomial:
        """The ambient variable called `name`."""
        exponents = tuple(int(v == name) for v in self.variables)
        if not any(exponents):
            msg = f"Unknown variable {name!r}"
            raise AlgebraError(msg)

        return Polynomial.monomial(exponents, modulus=self.modulus)

    @property
    def gens(self) -> list[Polynomial]:
        return [self.variable(v) for v in self.variables]

    # Elements
    # ------------------------------------------------------------------------
    def reduce(self, value: PolynomialLike) -> Polynomial:
        """Normal form of an element modulo the ideal."""
        polynomial = self._coerce(value)
        if not self.groebner_basis or polynomial.is_zero():
            return polynomial

        remainder = reduce_sparse({(0, m): c for m, c in polynomial.term_dict.items()}, self._reducers, self.modulus)
        return Polynomial({m: c for (_, m), c in remainder.items()}, nvars=self.nvars, modulus=self.modulus)

    def parse(self, text: str) -> Polynomial:
        """Parse text into a reduced element."""
        return self.reduce(parse_polynomial(text, self.variables, self.modulus))

    def format(self, value: Polynomial) -> str:
        return format_polynomial(value, self.variables)

    def is_zero(self, value: PolynomialLike) -> bool:
        return self.reduce(value).is_zero()

    # Relations between rings
    # ------------------------------------------------------------------------
    def same_ambient(self, other: QuotientRing) -> bool:
        return (self.variables, self.modulus) == (other.variables, other.modulus)

    def contains_ideal_of(self, other: QuotientRing) -> bool:
        """Whether the ideal of `other` is contained in the ideal of `self`."""
        return self.same_ambient(other) and all(self.is_zero(g) for g in other.groebner_basis)

    def is_quotient_of(self, other: QuotientRing) -> bool:
        """Whether `self` is presented as a quotient of `other`, so that `other -> self` is surjective."""
        return self.contains_ideal_of(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuotientRing):
            return NotImplemented

        return self.same_ambient(other) and self.groebner_basis == other.groebner_basis

    def __hash__(self) -> int:
        return hash((self.variables, self.modulus, self.groebner_basis))

    # Classification
    # ------------------------------------------------------------------------
    @cached_property
    def classification(self) -> RingClass:
        """Classify the ring for the complete-resolution machinery."""
        basis = self.groebner_basis
        if not basis:
            return RingClass.REGULAR

        if any(g.is_constant() for g in basis):
            return RingClass.UNSUPPORTED

        if len(basis) == 1:
            return RingClass.HYPERSURFACE

        leads = [g.leading_monomial for g in basis]
        coprime = all(
            all(min(a, b) == 0 for a, b in zip(leads[i], leads[j]))
            for i in range(len(leads))
            for j in range(i + 1, len(leads))
        )
        if self.is_artinian and (coprime or self.socle_dimension() == 1):
            return RingClass.ARTINIAN

        if coprime:
            return RingClass.COMPLETE_INTERSECTION

        return RingClass.UNSUPPORTED

    @property
    def is_artinian(self) -> bool:
        """Whether a pure power of every variable is a leading monomial of the ideal."""
        leads = [g.leading_monomial for g in self.groebner_basis]
        return all(any(m[i] > 0 and sum(m) == m[i] for m in leads) for i in range(self.nvars))

    @property
    def is_graded(self) -> bool:
        """Whether the ideal is generated by homogeneous polynomials."""
        return all(g.is_homogeneous() for g in self.ideal)

    def socle_dimension(self) -> int:
        """Dimension over `k` of the annihilator of the maximal ideal `(x_1..x_n)`."""
        column = VectorElement([self.reduce(g) for g in self.gens])
        return len(Submodule([column], self, rank=self.nvars).syzygies())

    def describe(self) -> str:
        """Human readable presentation such as `k[x,y]/(x^2)`."""
        text = f"GF({self.modulus})[{','.join(self.variables)}]"
        if self.ideal:
            text += "/(" + ", ".join(self.format(g) for g in self.ideal) + ")"

        return text

    def __repr__(self) -> str:
        return self.name or self.describe()
