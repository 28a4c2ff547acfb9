"""Left approximations, obtained by dualizing the right approximation of the dual complex."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple

from tac_approx.complexes import ChainMap, dual_base_change_iso, dualize, dualize_map
from tac_approx.functors import CheckReport, homotopy_report

from .right import RightApproximation, right_approximation, right_factorization

if TYPE_CHECKING:
    from collections.abc import Sequence

    from tac_approx.complexes import ChainComplex
    from tac_approx.functors import Adjunction

logger = logging.getLogger(__name__)


class LeftApproximation(NamedTuple):
    """The map `C -> S((TC*)*)` dual to the counit of `C*`."""

    complex: ChainComplex
    map: ChainMap
    base_complex: ChainComplex
    """The complex `(TC*)*` over the base ring whose reduction is the target."""

    dual: RightApproximation
    checks: tuple[CheckReport, ...] = ()


def _retarget(f: ChainMap, *, source: ChainComplex | None = None, target: ChainComplex | None = None) -> ChainMap:
    # Double duals and the duality isomorphisms are identities on the standard bases
    return ChainMap(
        source or f.source,
        target or f.target,
        dict(f.items()),
        window=f.window,
        periodicity=f.periodicity,
        name=f.name,
    )


def left_factorization(
    adjunction: Adjunction,
    approximation: LeftApproximation,
    g: ChainMap,
    base_complex: ChainComplex,
) -> ChainMap:
    """The map `S((TC*)*) -> SE` through which `g: C -> SE` factors up to homotopy.

    The dual `g*` is factored through the right approximation of `C*` and the factorization is dualized
    back.
    """
    ring = adjunction.ring
    dual_base = dualize(base_complex)
    into_dual = dualize_map(g, target=approximation.dual.map.target) @ dual_base_change_iso(base_complex, ring).forward
    h = right_factorization(adjunction, into_dual, dual_base)
    to_dual = dualize_map(h) @ dual_base_change_iso(approximation.dual.image.complex, ring).forward
    back = dual_base_change_iso(dual_base, ring).backward @ to_dual
    return _retarget(back, source=approximation.complex, target=g.target)


def left_factorization_check(
    adjunction: Adjunction,
    approximation: LeftApproximation,
    g: ChainMap,
    base_complex: ChainComplex,
) -> CheckReport:
    """Check `ψ ∘ λ_C ~ g` for a test morphism `g: C -> SE`, where `ψ` is the left factorization."""
    psi = left_factorization(adjunction, approximation, g, base_complex)
    lo, hi = adjunction.window_for(g.source)
    return homotopy_report("left factorization", psi @ approximation.map, g, (lo + 1, hi - 1))


def left_approximation(
    adjunction: Adjunction,
    complex_: ChainComplex,
    test_morphisms: Sequence[tuple[ChainMap, ChainComplex]] = (),
) -> LeftApproximation:
    """Left approximation `λ_C: C -> S((TC*)*)`.

    The target is built as the reduction of a complex over the base ring; `dual_base_change_iso` raises
    `ShapeMismatchError` if dualizing and reducing disagree on it.

    Args:
        adjunction: Functors between the base ring and the quotient ring.
        complex_: Totally acyclic complex `C` over the quotient ring.
        test_morphisms: Pairs `(g, E)` of maps `g: C -> SE` and their base complexes `E`.
    """
    dual = right_approximation(adjunction, dualize(complex_))
    iso = dual_base_change_iso(dual.image.complex, adjunction.ring)
    composite = iso.backward @ dualize_map(dual.map, target=iso.backward.source)
    lam = ChainMap(
        complex_,
        iso.backward.target,
        dict(composite.items()),
        window=composite.window,
        periodicity=composite.periodicity,
        name="lambda",
    )
    approximation = LeftApproximation(iso.backward.target, lam, dualize(dual.image.complex), dual)
    if not test_morphisms:
        return approximation

    checks = tuple(left_factorization_check(adjunction, approximation, g, e) for g, e in test_morphisms)
    logger.info("%d of %d test morphisms factor through the left approximation", sum(map(bool, checks)), len(checks))
    return approximation._replace(checks=checks)
