"""Minimal free resolutions of finitely presented modules."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import TYPE_CHECKING

from tqdm import tqdm

from tac_approx.algebra import FreeMap, ModulePresentation, RingMismatchError, VectorElement, prune_generators, syzygies
from tac_approx.complexes import ChainComplex

if TYPE_CHECKING:
    from tac_approx.algebra import QuotientRing

logger = logging.getLogger(__name__)


def kernel_generators(ring: QuotientRing, base: QuotientRing) -> list[VectorElement]:
    """Generators of the kernel of `base -> ring` as vectors of rank one over `base`."""
    if not ring.is_quotient_of(base):
        msg = f"{ring!r} is not a quotient of {base!r}"
        raise RingMismatchError(msg)

    return [VectorElement([base.reduce(g)]) for g in ring.groebner_basis if not base.is_zero(g)]


def restrict_scalars(module: ModulePresentation, base: QuotientRing) -> ModulePresentation:
    """The same module viewed over a ring it is a quotient of.

    Relations are read over `base` and extended by `g * e_j` for every kernel generator `g` and every
    generator `e_j`; redundant relations are pruned.

    Raises:
        RingMismatchError: If the module's ring is not a quotient of `base`.
    """
    rank = module.generator_rank
    kernel = kernel_generators(module.ring, base)
    lifted = module.relations.over(base).columns()
    for g in kernel:
        lifted += [VectorElement.unit(base, rank, j).scale(g[0]) for j in range(rank)]

    columns = prune_generators([c for c in lifted if not c.is_zero()], base, rank=rank)
    logger.debug("Restricted %d relations to %d over %r", module.relations.source_rank, len(columns), base)
    return ModulePresentation(FreeMap.from_columns(base, columns, target_rank=rank))


def _minimalize(previous: FreeMap, relations: FreeMap) -> tuple[FreeMap, FreeMap]:
    """Strike generators of the middle module made redundant by unit entries of `relations`."""
    change = ModulePresentation(relations).minimal()
    return previous @ change.section, change.presentation.relations


def minimal_free_resolution(module: ModulePresentation, length: int, *, progress: bool = False) -> ChainComplex:
    """Minimal free resolution `F` of a module in degrees `[0, length]`.

    The presentation is minimalized first, and each further differential generates the kernel of the
    previous one. When the resolution terminates, the remaining degrees are zero.

    Args:
        module: Module to resolve.
        length: Highest degree computed.
        progress: Show a progress bar.

    Returns:
        Complex with `coker d_1 = module` recorded as its augmentation.
    """
    if length < 0:
        msg = f"Resolution length must be non-negative; got {length}"
        raise ValueError(msg)

    ring = module.ring
    presentation = module.minimal().presentation
    ranks = {0: presentation.generator_rank}
    differentials: dict[int, FreeMap] = {}
    if length >= 1:
        differentials[1] = presentation.relations
        ranks[1] = presentation.relations.source_rank

    with tqdm(desc="resolution", total=max(length - 1, 0), unit="degree", disable=not progress) as pbar:
        for n in range(2, length + 1):
            pbar.update(1)
            if ranks[n - 1] == 0:
                ranks[n] = 0
                continue

            d_prev, d = _minimalize(differentials[n - 1], syzygies(differentials[n - 1]))
            differentials[n - 1] = d_prev
            differentials[n] = d
            ranks[n] = d.source_rank
            logger.debug("Resolution degree %d has rank %d", n, ranks[n])

    logger.info("Resolved a module with %d generators to length %d; ranks %s", ranks[0], length, ranks)
    return ChainComplex(ring, (0, length), differentials, ranks=ranks, augmentation=presentation)


def projective_dimension(resolution: ChainComplex) -> int | None:
    """Length of a resolution that terminates on its window, or `None`.

    The zero module is reported with projective dimension zero.
    """
    lo, hi = resolution.window
    if resolution.rank(hi) != 0:
        return None

    top = max((n for n in range(lo, hi + 1) if resolution.rank(n) != 0), default=lo)
    return top - lo


@lru_cache(maxsize=32)
def ring_resolution(base: QuotientRing, ring: QuotientRing, max_length: int) -> ChainComplex:
    """Minimal free resolution over `base` of the quotient ring `ring`, computed once per pair.

    Raises:
        RingMismatchError: If `ring` is not a quotient of `base`.
    """
    generators = kernel_generators(ring, base)
    relations = FreeMap(base, [[g[0] for g in generators]], source_rank=len(generators))
    return minimal_free_resolution(ModulePresentation(relations), max_length)
