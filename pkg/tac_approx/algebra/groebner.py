"""Gröbner bases of submodules of free modules over quotient polynomial rings.

Terms of a free module are ordered position-over-term: a term in an earlier component is larger,
and terms in the same component compare by the graded reverse lexicographic order. Computation over
a quotient ring `P/I` is carried out in the ambient ring `P` with `(ideal generator) * e_j` appended
for every basis vector `e_j`.
"""

from __future__ import annotations

import heapq
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Union

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul

from .errors import AlgebraError, RankMismatchError
from .field import inverse
from .polynomial import Polynomial, monomial_key
from .vector import SparseVector, Term, VectorElement

if TYPE_CHECKING:
    from .polynomial import OrderKey
    from .ring import QuotientRing

logger = logging.getLogger(__name__)


def term_key(term: Term) -> tuple[int, OrderKey]:
    """Sort key of a module term; larger keys are larger terms."""
    component, monomial = term
    return (-component, monomial_key(monomial))


def leading_term(vector: SparseVector) -> Term:
    return max(vector, key=term_key)


@dataclass
class _Element:
    vector: SparseVector
    lead: Term = field(init=False)

    def __post_init__(self) -> None:
        self.lead = leading_term(self.vector)


def _monic(vector: SparseVector, modulus: int) -> SparseVector:
    factor = inverse(vector[leading_term(vector)], modulus)
    return {t: c * factor % modulus for t, c in vector.items()}


def _subtract_multiple(
    target: SparseVector,
    coefficient: int,
    monomial: tuple[int, ...],
    other: SparseVector,
    modulus: int,
) -> None:
    """In place `target -= coefficient * x^monomial * other`."""
    for (component, m), c in other.items():
        key = (component, monomial_mul(m, monomial))
        value = (target.get(key, 0) - coefficient * c) % modulus
        if value:
            target[key] = value
        else:
            target.pop(key, None)


def _index(basis: Iterable[_Element]) -> dict[int, list[_Element]]:
    index: dict[int, list[_Element]] = {}
    for element in basis:
        index.setdefault(element.lead[0], []).append(element)

    return index


def reduce_sparse(vector: SparseVector, basis: Sequence[_Element], modulus: int) -> SparseVector:
    """Full reduction of `vector` by monic basis elements; returns the remainder."""
    index = _index(basis)
    work = dict(vector)
    remainder: SparseVector = {}
    while work:
        lead = leading_term(work)
        coefficient = work[lead]
        component, monomial = lead
        for element in index.get(component, ()):
            if monomial_divides(element.lead[1], monomial):
                _subtract_multiple(work, coefficient, monomial_div(monomial, element.lead[1]), element.vector, modulus)
                break
        else:
            remainder[lead] = coefficient
            del work[lead]

    return remainder


def _s_vector(f: _Element, g: _Element, modulus: int) -> SparseVector:
    lcm = monomial_lcm(f.lead[1], g.lead[1])
    result: SparseVector = {}
    _subtract_multiple(result, modulus - 1, monomial_div(lcm, f.lead[1]), f.vector, modulus)
    _subtract_multiple(result, 1, monomial_div(lcm, g.lead[1]), g.vector, modulus)
    return result


def reduced_groebner_basis(vectors: Iterable[SparseVector], modulus: int) -> list[SparseVector]:
    """Reduced Gröbner basis of the submodule generated by sparse vectors.

    Plain Buchberger with the normal pair-selection strategy: S-vectors are only formed for pairs whose
    leading terms share a component. The result is monic and sorted descending by leading term, so it is
    canonical for the fixed order.
    """
    basis: list[_Element] = []
    pairs: list[tuple[int, int, int]] = []

    def add(vector: SparseVector) -> None:
        element = _Element(_monic(vector, modulus))
        new = len(basis)
        for i, other in enumerate(basis):
            if other.lead[0] == element.lead[0]:
                degree = sum(monomial_lcm(other.lead[1], element.lead[1]))
                heapq.heappush(pairs, (degree, i, new))

        basis.append(element)

    for vector in vectors:
        remainder = reduce_sparse(vector, basis, modulus) if vector else {}
        if remainder:
            add(remainder)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        remainder = reduce_sparse(_s_vector(basis[i], basis[j], modulus), basis, modulus)
        if remainder:
            add(remainder)

    # Minimize, keeping the first of equal leading terms
    minimal: list[_Element] = []
    for k, element in enumerate(basis):
        component, monomial = element.lead
        redundant = any(
            other.lead[0] == component
            and monomial_divides(other.lead[1], monomial)
            and (other.lead != element.lead or m < k)
            for m, other in enumerate(basis)
            if m != k
        )
        if not redundant:
            minimal.append(element)

    # Interreduce tails
    reduced = []
    for k, element in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        reduced.append(_monic(reduce_sparse(element.vector, others, modulus), modulus))

    reduced.sort(key=lambda v: term_key(leading_term(v)), reverse=True)
    logger.debug("Reduced Gröbner basis with %d elements from %d candidates", len(reduced), len(basis))
    return reduced


# Public API over quotient rings
# ----------------------------------------------------------------------------
def _common_rank(generators: Sequence[VectorElement], rank: int | None) -> int:
    ranks = {g.rank for g in generators}
    if rank is not None:
        ranks.add(rank)

    if len(ranks) > 1:
        msg = f"Generators do not share one rank; got ranks {sorted(ranks)}"
        raise RankMismatchError(msg)

    if not ranks:
        msg = "Rank of the free module is unknown for an empty generator list"
        raise RankMismatchError(msg)

    return ranks.pop()


def ideal_multiples(ring: QuotientRing, rank: int, offset: int = 0) -> list[SparseVector]:
    """`h * e_j` for every Gröbner basis element `h` of the ring's ideal and every `j < rank`."""
    return [
        {(offset + j, m): c for m, c in h.term_dict.items()} for h in ring.groebner_basis for j in range(rank)
    ]


def buchberger(
    generators: Sequence[VectorElement],
    ring: QuotientRing,
    *,
    rank: int | None = None,
) -> list[VectorElement]:
    """Reduced Gröbner basis of the submodule generated by `generators` in `ring^rank`.

    Args:
        generators: Vectors of a common rank.
        ring: The quotient ring; its ideal multiples are appended to the generators.
        rank: Rank of the free module; required only when `generators` is empty.

    Returns:
        The reduced Gröbner basis over the ambient ring, including elements coming from the ideal.

    Raises:
        RankMismatchError: If generator ranks differ.
    """
    rank = _common_rank(generators, rank)
    vectors = [g.to_sparse() for g in generators] + ideal_multiples(ring, rank)
    return [
        VectorElement.from_sparse(v, rank=rank, nvars=ring.nvars, modulus=ring.modulus)
        for v in reduced_groebner_basis(vectors, ring.modulus)
    ]


def normal_form(v: VectorElement, basis: Sequence[VectorElement], ring: QuotientRing) -> VectorElement:
    """Remainder of `v` on division by a Gröbner basis as returned by `buchberger()`."""
    if any(b.rank != v.rank for b in basis):
        msg = f"Vector of rank {v.rank} does not match the basis"
        raise RankMismatchError(msg)

    elements = [_Element(_monic(b.to_sparse(), ring.modulus)) for b in basis if not b.is_zero()]
    remainder = reduce_sparse(v.to_sparse(), elements, ring.modulus)
    return VectorElement.from_sparse(remainder, rank=v.rank, nvars=ring.nvars, modulus=ring.modulus)


@dataclass(frozen=True)
class NotMember:
    """Definitive negative answer of a membership test."""

    reason: str = "not in the submodule"

    def __bool__(self) -> bool:
        return False


Witness = Union[list[Polynomial], NotMember]


class Submodule:
    """Submodule of `ring^rank` spanned by fixed generators, answering membership and syzygy questions.

    The Gröbner basis of `{(g_i; e_i)}` in `ring^(rank + count)` is computed once. Since the first block
    is larger in the module order, remainders of `(v; 0)` decide membership of `v` and carry the
    coefficients in their second block, while basis elements with a zero first block generate the
    syzygies of the generators.
    """

    def __init__(self, generators: Sequence[VectorElement], ring: QuotientRing, *, rank: int | None = None) -> None:
        """Initialize the submodule.

        Args:
            generators: Spanning vectors.
            ring: Coefficient ring.
            rank: Rank of the ambient free module; required only when `generators` is empty.
        """
        self.ring = ring
        self.rank = _common_rank(generators, rank)
        self.generators = tuple(generators)
        self._basis: list[_Element] | None = None

    @property
    def count(self) -> int:
        return len(self.generators)

    @property
    def basis(self) -> list[_Element]:
        if self._basis is None:
            vectors = []
            for i, g in enumerate(self.generators):
                vector = g.to_sparse()
                vector[(self.rank + i, (0,) * self.ring.nvars)] = 1
                vectors.append(vector)

            vectors += ideal_multiples(self.ring, self.rank)
            vectors += ideal_multiples(self.ring, self.count, offset=self.rank)
            self._basis = [_Element(v) for v in reduced_groebner_basis(vectors, self.ring.modulus)]

        return self._basis

    def witness(self, v: VectorElement) -> Witness:
        """Coefficients `c` with `v = sum c_i g_i` in the ring, or `NotMember`."""
        if v.rank != self.rank:
            msg = f"Vector of rank {v.rank} does not live in a free module of rank {self.rank}"
            raise RankMismatchError(msg)

        remainder = reduce_sparse(v.to_sparse(), self.basis, self.ring.modulus)
        if any(component < self.rank for component, _ in remainder):
            return NotMember()

        modulus = self.ring.modulus
        coefficients = VectorElement.from_sparse(
            {(component - self.rank, m): -c for (component, m), c in remainder.items()},
            rank=self.count,
            nvars=self.ring.nvars,
            modulus=modulus,
        ).components
        self._verify(v, coefficients)
        return list(coefficients)

    def _verify(self, v: VectorElement, coefficients: Sequence[Polynomial]) -> None:
        combination = VectorElement.zero(self.ring, self.rank)
        for c, g in zip(coefficients, self.generators):
            combination += g.scale(c)

        if not all(self.ring.reduce(p).is_zero() for p in (combination - v)):
            msg = "Membership witness failed re-substitution"
            raise AlgebraError(msg)

    def contains(self, v: VectorElement) -> bool:
        return not isinstance(self.witness(v), NotMember)

    def syzygies(self) -> list[VectorElement]:
        """Irredundant generators of the relations among the generators, reduced modulo the ideal."""
        kernel = []
        for element in self.basis:
            if element.lead[0] < self.rank:
                continue

            vector = VectorElement.from_sparse(
                {(component - self.rank, m): c for (component, m), c in element.vector.items()},
                rank=self.count,
                nvars=self.ring.nvars,
                modulus=self.ring.modulus,
            )
            vector = VectorElement([self.ring.reduce(p) for p in vector])
            if not vector.is_zero():
                kernel.append(vector)

        return prune_generators(kernel, self.ring, rank=self.count)


def prune_generators(
    generators: Sequence[VectorElement],
    ring: QuotientRing,
    *,
    rank: int,
) -> list[VectorElement]:
    """Greedily drop generators lying in the span of the remaining ones.

    For graded input the result is a minimal generating set.
    """
    kept = [g for g in generators if not all(ring.reduce(p).is_zero() for p in g)]
    index = 0
    while index < len(kept):
        others = kept[:index] + kept[index + 1 :]
        basis = buchberger(others, ring, rank=rank)
        if normal_form(kept[index], basis, ring).is_zero():
            del kept[index]
        else:
            index += 1

    return kept


def membership_with_witness(v: VectorElement, generators: Sequence[VectorElement], ring: QuotientRing) -> Witness:
    """Express `v` as a combination of `generators` over the ring.

    Returns:
        Coefficients `c` with `v = sum c_i * generators[i]`, verified by re-substitution, or
        `NotMember` if `v` is not in the submodule.
    """
    return Submodule(generators, ring, rank=v.rank).witness(v)
