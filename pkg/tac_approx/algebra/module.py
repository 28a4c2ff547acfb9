from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple

from .errors import RankMismatchError
from .field import inverse
from .free_map import FreeMap
from .groebner import NotMember, Submodule, prune_generators
from .linear import matrix_equation_kernel, solve, solve_matrix_equation, syzygies
from .vector import VectorElement

if TYPE_CHECKING:
    from .ring import QuotientRing

logger = logging.getLogger(__name__)


class PresentationChange(NamedTuple):
    """Result of minimalizing a presentation.

    `projection` maps old generators to new ones and `section` maps new generators back; both induce
    mutually inverse isomorphisms of the presented module.
    """

    presentation: ModulePresentation
    projection: FreeMap
    section: FreeMap


class ModulePresentation:
    """Finitely presented module `coker(relations: ring^r -> ring^generator_rank)`."""

    def __init__(self, relations: FreeMap) -> None:  # noqa: D107
        self.relations = relations

    @classmethod
    def free(cls, ring: QuotientRing, rank: int) -> ModulePresentation:
        return cls(FreeMap.zero(ring, rank, 0))

    @property
    def ring(self) -> QuotientRing:
        return self.relations.ring

    @property
    def generator_rank(self) -> int:
        return self.relations.target_rank

    def is_zero(self) -> bool:
        """Whether every generator lies in the span of the relations."""
        submodule = Submodule(self.relations.columns(), self.ring, rank=self.generator_rank)
        return all(
            submodule.contains(VectorElement.unit(self.ring, self.generator_rank, i))
            for i in range(self.generator_rank)
        )

    def over(self, ring: QuotientRing) -> ModulePresentation:
        return ModulePresentation(self.relations.over(ring))

    def minimal(self) -> PresentationChange:
        """Minimal presentation by striking constant entries and pruning redundant relations.

        Entries are scanned by row, then column. A nonzero constant `c` at `(i, j)` expresses generator
        `i` through the others; the generator and the relation are deleted and every other relation `l`
        becomes `col_l - (a_il / c) col_j`. Non-constant entries with a constant term are left alone, so
        the result is minimal for graded input.
        """
        ring = self.ring
        relations = self.relations
        projection = FreeMap.identity(ring, self.generator_rank)
        section = FreeMap.identity(ring, self.generator_rank)
        while (pivot := _find_constant(relations)) is not None:
            i, j = pivot
            factor = inverse(relations[i, j].constant_term, ring.modulus)
            keep = [r for r in range(relations.target_rank) if r != i]
            step_rows = []
            for r in keep:
                row = [ring.one if c == r else ring.zero for c in range(relations.target_rank)]
                row[i] = relations[r, j].scale(-factor)
                step_rows.append(row)

            step = FreeMap(ring, step_rows, source_rank=relations.target_rank, target_rank=len(keep))
            include = FreeMap.identity(ring, relations.target_rank).submatrix(
                range(relations.target_rank), keep
            )
            reduced = step @ relations
            relations = reduced.submatrix(range(reduced.target_rank), [c for c in range(reduced.source_rank) if c != j])
            projection = step @ projection
            section = section @ include

        columns = [c for c in relations.columns() if not c.is_zero()]
        columns = prune_generators(columns, ring, rank=relations.target_rank)
        relations = FreeMap.from_columns(ring, columns, target_rank=relations.target_rank)
        logger.debug(
            "Minimal presentation with %d generators and %d relations",
            relations.target_rank,
            relations.source_rank,
        )
        return PresentationChange(ModulePresentation(relations), projection, section)

    def syzygy_module(self) -> ModulePresentation:
        """Presentation of the first syzygy module, the image of the minimal relations."""
        minimal = self.minimal().presentation
        return ModulePresentation(syzygies(minimal.relations))

    def induces_map(self, target: ModulePresentation, matrix: FreeMap) -> bool:
        """Whether `matrix` on generators sends every relation into the relations of `target`."""
        module_map_check(self, target, matrix)
        return not isinstance(solve(target.relations, matrix @ self.relations), NotMember)

    def homomorphisms(self, target: ModulePresentation) -> list[FreeMap]:
        """Generators of `Hom(self, target)` as matrices on generators, without maps that are zero on cokernels.

        A matrix `X` induces a map exactly when `X @ A = B @ Y` for some `Y`, where `A` and `B` are the
        relations of `self` and `target`.
        """
        ring = self.ring
        a, b = self.relations, target.relations
        kernel = matrix_equation_kernel(
            [(FreeMap.identity(ring, target.generator_rank), a), (-b, FreeMap.identity(ring, a.source_rank))],
            (target.generator_rank, a.source_rank),
        )
        maps = []
        for x, _ in kernel:
            if isinstance(solve(b, x), NotMember) and x not in maps:
                maps.append(x)

        logger.debug("Hom of %r into %r has %d generators", self, target, len(maps))
        return maps

    def inverse_homomorphism(self, target: ModulePresentation, matrix: FreeMap) -> FreeMap | NotMember:
        """Matrix of the inverse of the induced map `self -> target`, or `NotMember` if it is not an isomorphism.

        The inverse `β` solves `β @ [B | α] - A @ Z = [0 | I]`, so that `β` induces a map and `β α` is the
        identity of `self`; `α β` is then checked against the identity of `target`.
        """
        module_map_check(self, target, matrix)
        ring = self.ring
        a, b = self.relations, target.relations
        m, n = self.generator_rank, target.generator_rank
        rhs = FreeMap.block([[FreeMap.zero(ring, m, b.source_rank), FreeMap.identity(ring, m)]])
        solution = solve_matrix_equation(
            [(FreeMap.identity(ring, m), FreeMap.block([[b, matrix]])), (-a, FreeMap.identity(ring, rhs.source_rank))],
            rhs,
        )
        if isinstance(solution, NotMember):
            return NotMember("the map has no left inverse")

        beta = solution[0]
        if isinstance(solve(b, matrix @ beta - FreeMap.identity(ring, n)), NotMember):
            return NotMember("the map has no right inverse")

        return beta

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModulePresentation):
            return NotImplemented

        return self.relations == other.relations

    def __hash__(self) -> int:
        return hash(self.relations)

    def __repr__(self) -> str:
        return f"coker {self.relations.format()}"


def _find_constant(m: FreeMap) -> tuple[int, int] | None:
    for i in range(m.target_rank):
        for j in range(m.source_rank):
            entry = m[i, j]
            if entry and entry.is_constant():
                return (i, j)

    return None


def module_map_check(source: ModulePresentation, target: ModulePresentation, matrix: FreeMap) -> None:
    """Raise if `matrix` does not have the shape of a map between the generators."""
    if matrix.shape != (target.generator_rank, source.generator_rank):
        msg = f"Module map of shape {matrix.shape} does not fit {source.generator_rank} -> {target.generator_rank}"
        raise RankMismatchError(msg)
