"""Comparison maps: lifting module maps to resolutions and extending chain maps downward."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from tac_approx.algebra import NotMember, solve, solve_left
from tac_approx.complexes import ChainMap

from .errors import LiftError

if TYPE_CHECKING:
    from tac_approx.algebra import FreeMap
    from tac_approx.complexes import ChainComplex

logger = logging.getLogger(__name__)


def lift_through(alpha: FreeMap, source: ChainComplex, target: ChainComplex, *, top: int | None = None) -> ChainMap:
    """Lift a map between degree zero generators to a chain map on degrees `[0, top]`.

    `alpha` must send the relations `d_1` of the source into the image of the target's `d_1`, so that
    it induces a map `coker d^S_1 -> coker d^T_1`. Each further component `mu_n` solves
    `d^T_n mu_n = mu_{n-1} d^S_n`, which is possible wherever the target is exact.

    Args:
        alpha: Component in degree zero.
        source: Complex whose non-negative part is free, typically a resolution.
        target: Complex exact in positive degrees.
        top: Highest degree lifted; defaults to the lower of the two windows' tops.

    Raises:
        LiftError: If some column does not lie in the image of the target's differential.
    """
    top = min(source.window.hi, target.window.hi) if top is None else top
    components = {0: alpha}
    for n in range(1, top + 1):
        mu = solve(target.differential(n), components[n - 1] @ source.differential(n))
        if isinstance(mu, NotMember):
            msg = f"Cannot lift through degree {n}: {mu.reason}"
            raise LiftError(msg)

        components[n] = mu

    logger.debug("Lifted a degree zero map through degrees 0..%d", top)
    return ChainMap(source, target, components, window=(0, max(top, 0)))


def extend_morphism(f: ChainMap, above: int, *, lo: int) -> ChainMap:
    """Extend a chain map known in degrees `> above` down to degree `lo`.

    Each new component solves `f_{n-1} d^S_n = d^T_n f_n`. Solutions exist when the source is totally
    acyclic, since `d^T_n f_n` then vanishes on the boundaries and factors through `d^S_n`.

    Raises:
        LiftError: If the known part does not commute or a solve fails.
    """
    hi = max(f.window.hi, above + 1)
    if f.failing_degree((above + 1, hi)) is not None:
        msg = f"Chain map does not commute above degree {above}"
        raise LiftError(msg)

    source, target = f.source, f.target
    components = {n: f.component(n) for n in range(above + 1, hi + 1)}
    for n in range(above + 1, lo, -1):
        component = solve_left(source.differential(n), target.differential(n) @ components[n])
        if isinstance(component, NotMember):
            msg = f"Cannot extend below degree {n}; the source is not totally acyclic there"
            raise LiftError(msg)

        components[n - 1] = component

    return ChainMap(source, target, components, window=(lo, hi), name=f.name)


def comparison_map(source: ChainComplex, target: ChainComplex, alpha: FreeMap, window: tuple[int, int]) -> ChainMap:
    """Chain map on a window inducing `alpha` on `coker d_1`, lifted upward and extended downward."""
    lo, hi = window
    lifted = lift_through(alpha, source, target, top=hi)
    if lo >= 0:
        return lifted.restrict((lo, hi)) if lo > 0 else lifted

    return extend_morphism(lifted, -1, lo=lo)
