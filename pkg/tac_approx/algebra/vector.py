from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from typing import TYPE_CHECKING

from .errors import RankMismatchError
from .polynomial import Monomial, Polynomial

if TYPE_CHECKING:
    from .ring import QuotientRing

# Sparse vector in a free module: (component, monomial) -> coefficient
Term = tuple[int, Monomial]
SparseVector = dict[Term, int]


class VectorElement:
    """Element of a free module of finite rank, stored densely as a tuple of polynomials."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Polynomial]) -> None:  # noqa: D107
        self.components: tuple[Polynomial, ...] = tuple(components)

    @classmethod
    def zero(cls, ring: QuotientRing, rank: int) -> VectorElement:
        return cls([ring.zero] * rank)

    @classmethod
    def unit(cls, ring: QuotientRing, rank: int, index: int) -> VectorElement:
        """The standard basis vector `e_index`."""
        return cls([ring.one if i == index else ring.zero for i in range(rank)])

    @classmethod
    def from_sparse(cls, vector: Mapping[Term, int], *, rank: int, nvars: int, modulus: int) -> VectorElement:
        """Build from the sparse `(component, monomial) -> coefficient` form."""
        buckets: list[dict[Monomial, int]] = [{} for _ in range(rank)]
        for (component, monomial), coefficient in vector.items():
            if not 0 <= component < rank:
                msg = f"Component {component} out of range for rank {rank}"
                raise RankMismatchError(msg)

            buckets[component][monomial] = coefficient

        return cls([Polynomial(b, nvars=nvars, modulus=modulus) for b in buckets])

    @property
    def rank(self) -> int:
        return len(self.components)

    def to_sparse(self, offset: int = 0) -> SparseVector:
        """Sparse form with components shifted by `offset`."""
        return {(offset + i, m): c for i, p in enumerate(self.components) for m, c in p.term_dict.items()}

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def _check(self, other: VectorElement) -> None:
        if other.rank != self.rank:
            msg = f"Vectors of rank {self.rank} and {other.rank} cannot be combined"
            raise RankMismatchError(msg)

    def __add__(self, other: VectorElement) -> VectorElement:
        self._check(other)
        return VectorElement([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: VectorElement) -> VectorElement:
        self._check(other)
        return VectorElement([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> VectorElement:
        return VectorElement([-a for a in self.components])

    def scale(self, factor: Polynomial) -> VectorElement:
        return VectorElement([factor * a for a in self.components])

    def __getitem__(self, index: int) -> Polynomial:
        return self.components[index]

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.components)

    def __len__(self) -> int:
        return self.rank

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorElement):
            return NotImplemented

        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"VectorElement({list(self.components)!r})"
