from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING, Union

from sympy import Matrix
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from .errors import RankMismatchError, RingMismatchError
from .polynomial import Polynomial
from .vector import VectorElement

if TYPE_CHECKING:
    from .ring import QuotientRing

Entry = Union[Polynomial, str, int]


class FreeMap:
    """Homomorphism `ring^source_rank -> ring^target_rank` given by a matrix in normal form.

    Column `j` is the image of the `j`-th basis vector of the source. Maps are immutable; all
    operations return new maps.
    """

    __slots__ = ("entries", "ring", "source_rank", "target_rank")

    def __init__(
        self,
        ring: QuotientRing,
        entries: Sequence[Sequence[Entry]],
        *,
        source_rank: int | None = None,
        target_rank: int | None = None,
    ) -> None:
        """Initialize a map from its rows.

        Args:
            ring: Coefficient ring; entries are reduced into normal form.
            entries: Matrix rows, `target_rank` rows of `source_rank` entries.
            source_rank: Required when there are no rows.
            target_rank: Checked against the number of rows when given.
        """
        rows = [list(row) for row in entries]
        if target_rank is None:
            target_rank = len(rows)

        if source_rank is None:
            if not rows:
                msg = "Source rank is required for a map without rows"
                raise RankMismatchError(msg)

            source_rank = len(rows[0])

        if len(rows) != target_rank or any(len(row) != source_rank for row in rows):
            msg = f"Matrix shape does not match {target_rank}x{source_rank}"
            raise RankMismatchError(msg)

        self.ring = ring
        self.source_rank = source_rank
        self.target_rank = target_rank
        self.entries: tuple[tuple[Polynomial, ...], ...] = tuple(
            tuple(ring.reduce(value) for value in row) for row in rows
        )

    # Constructors
    # ------------------------------------------------------------------------
    @classmethod
    def zero(cls, ring: QuotientRing, target_rank: int, source_rank: int) -> FreeMap:
        return cls(ring, [[0] * source_rank for _ in range(target_rank)], source_rank=source_rank)

    @classmethod
    def identity(cls, ring: QuotientRing, rank: int) -> FreeMap:
        return cls(ring, [[int(i == j) for j in range(rank)] for i in range(rank)], source_rank=rank)

    @classmethod
    def from_columns(cls, ring: QuotientRing, columns: Sequence[VectorElement], *, target_rank: int) -> FreeMap:
        if any(c.rank != target_rank for c in columns):
            msg = f"Columns must have rank {target_rank}"
            raise RankMismatchError(msg)

        return cls(
            ring,
            [[c[i] for c in columns] for i in range(target_rank)],
            source_rank=len(columns),
            target_rank=target_rank,
        )

    @classmethod
    def block(cls, grid: Sequence[Sequence[FreeMap]]) -> FreeMap:
        """Block matrix; every row of blocks shares a target rank and every column a source rank."""
        ring = grid[0][0].ring
        heights = [row[0].target_rank for row in grid]
        widths = [b.source_rank for b in grid[0]]
        rows: list[list[Polynomial]] = []
        for height, blocks in zip(heights, grid):
            if len(blocks) != len(widths) or any(
                b.target_rank != height or b.source_rank != w for b, w in zip(blocks, widths)
            ):
                msg = "Blocks do not fit together"
                raise RankMismatchError(msg)

            rows.extend([entry for b in blocks for entry in b.entries[i]] for i in range(height))

        return cls(ring, rows, source_rank=sum(widths), target_rank=sum(heights))

    @classmethod
    def direct_sum(cls, maps: Sequence[FreeMap], ring: QuotientRing) -> FreeMap:
        """Block diagonal map."""
        if not maps:
            return cls.zero(ring, 0, 0)

        grid = [
            [m if i == j else cls.zero(ring, m.target_rank, other.source_rank) for j, other in enumerate(maps)]
            for i, m in enumerate(maps)
        ]
        return cls.block(grid)

    # Inspection
    # ------------------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.target_rank, self.source_rank)

    def __getitem__(self, index: tuple[int, int]) -> Polynomial:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> VectorElement:
        return VectorElement([row[j] for row in self.entries])

    def columns(self) -> list[VectorElement]:
        return [self.column(j) for j in range(self.source_rank)]

    def row(self, i: int) -> VectorElement:
        return VectorElement(self.entries[i])

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self.entries for entry in row)

    def is_minimal(self) -> bool:
        """Whether no entry has a nonzero constant term."""
        return all(entry.constant_term == 0 for row in self.entries for entry in row)

    def constant_part(self) -> Matrix:
        """Matrix of constant terms as a sympy integer matrix."""
        return Matrix(self.target_rank, self.source_rank, lambda i, j: self.entries[i][j].constant_term)

    def residue(self) -> FreeMap:
        """The map with every entry replaced by its constant term."""
        rows = [[entry.constant_term for entry in row] for row in self.entries]
        return FreeMap(self.ring, rows, source_rank=self.source_rank, target_rank=self.target_rank)

    def constant_rank(self) -> int:
        """Rank over the residue field of the constant part."""
        if self.target_rank == 0 or self.source_rank == 0:
            return 0

        domain = GF(self.ring.modulus)
        rows = [[domain(entry.constant_term) for entry in row] for row in self.entries]
        return int(DomainMatrix(rows, self.shape, domain).rank())

    def is_invertible(self) -> bool:
        """Whether the map is an isomorphism of free modules over the local ring.

        A square matrix over a graded local ring is invertible exactly when its constant part is.
        """
        if self.target_rank != self.source_rank:
            return False

        if self.source_rank == 0:
            return True

        return self.constant_rank() == self.source_rank

    # Arithmetic
    # ------------------------------------------------------------------------
    def _check_ring(self, other: FreeMap) -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            msg = f"Maps over {self.ring!r} and {other.ring!r} cannot be combined"
            raise RingMismatchError(msg)

    def __matmul__(self, other: FreeMap) -> FreeMap:
        """Composition `self ∘ other`."""
        self._check_ring(other)
        if self.source_rank != other.target_rank:
            msg = f"Cannot compose {self.shape} with {other.shape}"
            raise RankMismatchError(msg)

        ring = self.ring
        rows = [
            [
                sum((self.entries[i][k] * other.entries[k][j] for k in range(self.source_rank)), ring.zero)
                for j in range(other.source_rank)
            ]
            for i in range(self.target_rank)
        ]
        return FreeMap(ring, rows, source_rank=other.source_rank, target_rank=self.target_rank)

    def _entrywise(self, other: FreeMap, sign: int) -> FreeMap:
        self._check_ring(other)
        if self.shape != other.shape:
            msg = f"Shapes {self.shape} and {other.shape} differ"
            raise RankMismatchError(msg)

        rows = [[a + b.scale(sign) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        return FreeMap(self.ring, rows, source_rank=self.source_rank, target_rank=self.target_rank)

    def __add__(self, other: FreeMap) -> FreeMap:
        return self._entrywise(other, 1)

    def __sub__(self, other: FreeMap) -> FreeMap:
        return self._entrywise(other, -1)

    def __neg__(self) -> FreeMap:
        return self.scale(-1)

    def scale(self, factor: Polynomial | int) -> FreeMap:
        rows = [[factor * a for a in row] for row in self.entries]
        return FreeMap(self.ring, rows, source_rank=self.source_rank, target_rank=self.target_rank)

    def transpose(self) -> FreeMap:
        rows = [[row[j] for row in self.entries] for j in range(self.source_rank)]
        return FreeMap(self.ring, rows, source_rank=self.target_rank, target_rank=self.source_rank)

    def kronecker(self, other: FreeMap) -> FreeMap:
        """Kronecker product; basis vectors of the products are ordered with `self`'s index major."""
        self._check_ring(other)
        rows = [
            [
                self.entries[i][j] * other.entries[k][m]
                for j in range(self.source_rank)
                for m in range(other.source_rank)
            ]
            for i in range(self.target_rank)
            for k in range(other.target_rank)
        ]
        return FreeMap(
            self.ring,
            rows,
            source_rank=self.source_rank * other.source_rank,
            target_rank=self.target_rank * other.target_rank,
        )

    def submatrix(self, rows: Sequence[int], columns: Sequence[int]) -> FreeMap:
        return FreeMap(
            self.ring,
            [[self.entries[i][j] for j in columns] for i in rows],
            source_rank=len(columns),
            target_rank=len(rows),
        )

    def over(self, ring: QuotientRing) -> FreeMap:
        """The same matrix read over another ring of the same ambient polynomial ring."""
        if not ring.same_ambient(self.ring):
            msg = f"{ring!r} and {self.ring!r} have different ambient polynomial rings"
            raise RingMismatchError(msg)

        return FreeMap(ring, self.entries, source_rank=self.source_rank, target_rank=self.target_rank)

    # Comparison and display
    # ------------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeMap):
            return NotImplemented

        return self.shape == other.shape and self.entries == other.entries and self.ring == other.ring

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def format(self) -> str:
        """Render as `[[a, b], [c, d]]` in the polynomial text grammar."""
        if self.target_rank == 0 or self.source_rank == 0:
            return f"zero({self.target_rank}x{self.source_rank})"

        return "[" + ", ".join("[" + ", ".join(self.ring.format(e) for e in row) + "]" for row in self.entries) + "]"

    def __repr__(self) -> str:
        return f"FreeMap({self.format()})"
