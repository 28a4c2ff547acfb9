from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple

from tac_approx.algebra import FreeMap
from tac_approx.algebra.field import inverse

from .chain_map import ChainMap, Homotopy
from .complex import ChainComplex, Window

if TYPE_CHECKING:
    from tac_approx.algebra import QuotientRing

logger = logging.getLogger(__name__)


class MinimalModel(NamedTuple):
    """Minimal complex `M` homotopy equivalent to a materialized window of `C`.

    `projection` and `inclusion` are mutually inverse up to homotopy: `projection ∘ inclusion` is the
    identity of `M` and `id - inclusion ∘ projection = d h + h d` on `C`.
    """

    complex: ChainComplex
    original: ChainComplex
    inclusion: ChainMap
    projection: ChainMap
    homotopy: Homotopy


def _find_unit(d: FreeMap) -> tuple[int, int] | None:
    for i in range(d.target_rank):
        for j in range(d.source_rank):
            entry = d[i, j]
            if entry and entry.is_constant():
                return (i, j)

    return None


class _Eliminator:
    """Mutable state of the degreewise Gaussian elimination."""

    def __init__(self, original: ChainComplex) -> None:
        ring = original.ring
        self.ring: QuotientRing = ring
        self.window = original.window
        self.ranks = original.ranks()
        self.differentials = dict(original.items())
        self.inclusion = {n: FreeMap.identity(ring, r) for n, r in self.ranks.items()}
        self.projection = {n: FreeMap.identity(ring, r) for n, r in self.ranks.items()}
        self.homotopy = {n: FreeMap.zero(ring, original.rank(n + 1), r) for n, r in self.ranks.items()}

    def eliminate(self, n: int, i: int, j: int) -> None:
        """Cancel the unit entry `(i, j)` of `d_n` against basis vector `j` of degree `n` and `i` of degree `n-1`."""
        ring = self.ring
        d = self.differentials[n]
        rank, lower = self.ranks[n], self.ranks[n - 1]
        u = inverse(d[i, j].constant_term, ring.modulus)
        cols = [c for c in range(rank) if c != j]
        rows = [r for r in range(lower) if r != i]
        delta = d.submatrix([i], cols)
        gamma = d.submatrix(rows, [j])

        project_top = FreeMap.identity(ring, rank).submatrix(cols, range(rank))
        project_bottom = FreeMap(
            ring,
            [[-u * gamma[k, 0] if c == i else int(c == r) for c in range(lower)] for k, r in enumerate(rows)],
            source_rank=lower,
            target_rank=len(rows),
        )
        include_top = FreeMap(
            ring,
            [list(delta.scale(-u).entries[0]) if r == j else [int(r == c) for c in cols] for r in range(rank)],
            source_rank=len(cols),
            target_rank=rank,
        )
        include_bottom = FreeMap.identity(ring, lower).submatrix(range(lower), rows)
        step = FreeMap(
            ring,
            [[u if (r, c) == (j, i) else 0 for c in range(lower)] for r in range(rank)],
            source_rank=lower,
            target_rank=rank,
        )

        self.homotopy[n - 1] = self.homotopy[n - 1] + self.inclusion[n] @ step @ self.projection[n - 1]
        self.inclusion[n] = self.inclusion[n] @ include_top
        self.inclusion[n - 1] = self.inclusion[n - 1] @ include_bottom
        self.projection[n] = project_top @ self.projection[n]
        self.projection[n - 1] = project_bottom @ self.projection[n - 1]

        self.differentials[n] = d.submatrix(rows, cols) - (gamma @ delta).scale(u)
        if n + 1 in self.differentials:
            above = self.differentials[n + 1]
            self.differentials[n + 1] = above.submatrix(cols, range(above.source_rank))

        if n - 1 in self.differentials:
            below = self.differentials[n - 1]
            self.differentials[n - 1] = below.submatrix(range(below.target_rank), rows)

        self.ranks[n] -= 1
        self.ranks[n - 1] -= 1

    def run(self) -> None:
        for n in range(self.window.lo + 1, self.window.hi + 1):
            while (pivot := _find_unit(self.differentials[n])) is not None:
                self.eliminate(n, *pivot)


def minimal_model(complex_: ChainComplex, window: tuple[int, int] | None = None) -> MinimalModel:
    """Minimal model of a complex on a window by cancelling unit entries.

    Unit entries are scanned by degree, then row, then column. The window is materialized as a bounded
    complex first, so degrees at its ends may keep summands the full complex would cancel.
    """
    lo, hi = Window(*(window or complex_.window))
    original = ChainComplex(
        complex_.ring,
        (lo, hi),
        {n: complex_.differential(n) for n in range(lo + 1, hi + 1)},
        ranks=complex_.ranks((lo, hi)),
        name=complex_.name,
    )
    state = _Eliminator(original)
    state.run()

    model = ChainComplex(complex_.ring, (lo, hi), state.differentials, ranks=state.ranks, name=complex_.name)
    logger.debug("Minimal model ranks %s from %s", state.ranks, original.ranks())
    return MinimalModel(
        complex=model,
        original=original,
        inclusion=ChainMap(model, original, state.inclusion),
        projection=ChainMap(original, model, state.projection),
        homotopy=Homotopy(original, original, state.homotopy, window=(lo, hi)),
    )
