"""Right approximations of totally acyclic complexes over `R` by reductions of complexes over `Q`."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple

from tac_approx.functors import CheckReport, homotopy_report

if TYPE_CHECKING:
    from collections.abc import Sequence

    from tac_approx.complexes import ChainComplex, ChainMap
    from tac_approx.functors import Adjunction, ForgetfulImage

logger = logging.getLogger(__name__)


class RightApproximation(NamedTuple):
    """The counit `ε_C: STC -> C` with the spot checks run against it."""

    complex: ChainComplex
    map: ChainMap
    image: ForgetfulImage
    checks: tuple[CheckReport, ...] = ()
    """Factorization checks of supplied test morphisms. Passing checks do not prove the universal property."""

    @property
    def is_trivial(self) -> bool:
        return self.complex.is_zero()


def right_factorization(adjunction: Adjunction, f: ChainMap, base_complex: ChainComplex) -> ChainMap:
    """The map `S(T[f] ∘ η_D): SD -> STC` through which `f: SD -> C` factors up to homotopy."""
    return adjunction.apply_S_morphism(adjunction.adjunction_backward(f, base_complex))


def right_factorization_check(
    adjunction: Adjunction,
    approximation: RightApproximation,
    f: ChainMap,
    base_complex: ChainComplex,
) -> CheckReport:
    """Check `ε_C ∘ S(T[f] ∘ η_D) ~ f` for a test morphism `f: SD -> C`."""
    h = right_factorization(adjunction, f, base_complex)
    lo, hi = adjunction.window_for(approximation.map.target)
    return homotopy_report("right factorization", approximation.map @ h, f, (lo + 1, hi - 1))


def right_approximation(
    adjunction: Adjunction,
    complex_: ChainComplex,
    test_morphisms: Sequence[tuple[ChainMap, ChainComplex]] = (),
) -> RightApproximation:
    """Right approximation of `C` in the image of base change.

    Args:
        adjunction: Functors between the base ring and the quotient ring.
        complex_: Totally acyclic complex `C` over the quotient ring.
        test_morphisms: Pairs `(f, D)` of maps `f: SD -> C` and their base complexes `D`; each is
            checked to factor through the approximation.
    """
    image = adjunction.apply_T(complex_)
    epsilon = adjunction.counit(complex_)
    approximation = RightApproximation(epsilon.source, epsilon, image)
    if not test_morphisms:
        return approximation

    checks = tuple(right_factorization_check(adjunction, approximation, f, d) for f, d in test_morphisms)
    logger.info("%d of %d test morphisms factor through the counit", sum(map(bool, checks)), len(checks))
    return approximation._replace(checks=checks)
