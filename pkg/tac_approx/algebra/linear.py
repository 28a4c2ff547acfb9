"""Linear algebra over quotient rings: kernels, solving matrix equations and inverses."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Union

from .errors import NotInvertibleError, RankMismatchError
from .free_map import FreeMap
from .groebner import NotMember, Submodule
from .vector import VectorElement

logger = logging.getLogger(__name__)

Solution = Union[FreeMap, NotMember]


def syzygies(m: FreeMap) -> FreeMap:
    """Map whose columns minimally generate the kernel of `m`.

    Examples:
        The Koszul relation of `[x y]` over `k[x,y]` is the single column `(y, -x)`.
    """
    kernel = Submodule(m.columns(), m.ring, rank=m.target_rank).syzygies()
    logger.debug("Kernel of a %dx%d map has %d generators", m.target_rank, m.source_rank, len(kernel))
    return FreeMap.from_columns(m.ring, kernel, target_rank=m.source_rank)


def solve(a: FreeMap, b: FreeMap) -> Solution:
    """Find `X` with `a @ X == b`, solving one column of `b` at a time."""
    if a.target_rank != b.target_rank:
        msg = f"Cannot solve {a.shape} @ X = {b.shape}"
        raise RankMismatchError(msg)

    submodule = Submodule(a.columns(), a.ring, rank=a.target_rank)
    columns = []
    for j, column in enumerate(b.columns()):
        witness = submodule.witness(column)
        if isinstance(witness, NotMember):
            return NotMember(f"column {j} is not in the image")

        columns.append(VectorElement(witness))

    return FreeMap.from_columns(a.ring, columns, target_rank=a.source_rank)


def solve_left(a: FreeMap, b: FreeMap) -> Solution:
    """Find `X` with `X @ a == b`."""
    if a.source_rank != b.source_rank:
        msg = f"Cannot solve X @ {a.shape} = {b.shape}"
        raise RankMismatchError(msg)

    solution = solve(a.transpose(), b.transpose())
    return solution if isinstance(solution, NotMember) else solution.transpose()


# Linear matrix equations `sum_i left_i @ X_i @ right_i = rhs`
# ----------------------------------------------------------------------------
Term = tuple[FreeMap, FreeMap]


def _operator(terms: Sequence[Term], shape: tuple[int, int]) -> FreeMap:
    """Matrix of the equation on row-major flattened unknowns.

    The coefficient of `X[l][j]` in entry `(i, k)` of `left @ X @ right` is `left[i][l] * right[j][k]`,
    so each term contributes the Kronecker product of `left` and `right^T`.
    """
    rows, columns = shape
    blocks = []
    for left, right in terms:
        if left.target_rank != rows or right.source_rank != columns:
            msg = f"Term {left.shape} @ X @ {right.shape} does not have shape {shape}"
            raise RankMismatchError(msg)

        blocks.append(left.kronecker(right.transpose()))

    return FreeMap.block([blocks])


def _unflatten(vector: VectorElement, terms: Sequence[Term]) -> list[FreeMap]:
    unknowns = []
    offset = 0
    for left, right in terms:
        rows, columns = left.source_rank, right.target_rank
        unknowns.append(
            FreeMap(
                left.ring,
                [[vector[offset + l * columns + j] for j in range(columns)] for l in range(rows)],  # noqa: E741
                source_rank=columns,
                target_rank=rows,
            )
        )
        offset += rows * columns

    return unknowns


def _zero_unknowns(terms: Sequence[Term]) -> list[FreeMap]:
    return [FreeMap.zero(left.ring, left.source_rank, right.target_rank) for left, right in terms]


def solve_matrix_equation(terms: Sequence[Term], rhs: FreeMap) -> Union[list[FreeMap], NotMember]:
    """Find maps `X_i` with `sum_i left_i @ X_i @ right_i == rhs`.

    Args:
        terms: Pairs `(left_i, right_i)`; the shape of `X_i` is `(left_i.source_rank, right_i.target_rank)`.
        rhs: Right hand side.

    Returns:
        One solution, unknowns in the order of `terms`, or `NotMember` if there is none.
    """
    if not terms:
        msg = "A matrix equation needs at least one term"
        raise RankMismatchError(msg)

    operator = _operator(terms, rhs.shape)
    if rhs.target_rank * rhs.source_rank == 0:
        return _zero_unknowns(terms)

    if operator.source_rank == 0:
        return _zero_unknowns(terms) if rhs.is_zero() else NotMember("no unknowns to solve for")

    target = FreeMap(rhs.ring, [[entry] for row in rhs.entries for entry in row], source_rank=1)
    solution = solve(operator, target)
    if isinstance(solution, NotMember):
        return solution

    return _unflatten(solution.column(0), terms)


def matrix_equation_kernel(terms: Sequence[Term], shape: tuple[int, int]) -> list[list[FreeMap]]:
    """Generators of the solutions of the homogeneous equation `sum_i left_i @ X_i @ right_i == 0`."""
    operator = _operator(terms, shape)
    if operator.source_rank == 0:
        return []

    return [_unflatten(column, terms) for column in syzygies(operator).columns()]


def inverse(m: FreeMap) -> FreeMap:
    """Two-sided inverse of an invertible square map.

    Raises:
        NotInvertibleError: If the map is not invertible.
    """
    if not m.is_invertible():
        msg = f"Map of shape {m.shape} is not invertible"
        raise NotInvertibleError(msg)

    solution = solve(m, FreeMap.identity(m.ring, m.target_rank))
    if isinstance(solution, NotMember):
        msg = f"Map of shape {m.shape} has no inverse over {m.ring!r}"
        raise NotInvertibleError(msg)

    return solution

