"""Cones of counits and the tower of iterated right approximations."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple, Union

from tqdm import tqdm

from tac_approx.algebra import FreeMap
from tac_approx.complexes import ChainMap, MinimalModel, Window, cone, minimal_model, shift
from tac_approx.functors import CheckReport, equivalence_report, homotopy_report
from tac_approx.resolution import Equivalence, NotEquivalent, find_equivalence

if TYPE_CHECKING:
    from tac_approx.complexes import ChainComplex
    from tac_approx.functors import Adjunction

logger = logging.getLogger(__name__)


def _counit_on_window(adjunction: Adjunction, complex_: ChainComplex) -> ChainMap:
    # A zero counit only covers the window of its source; widen it to the window of `C`
    epsilon = adjunction.counit(complex_)
    if not epsilon.source.is_zero():
        return epsilon

    return ChainMap(epsilon.source, complex_, {}, window=adjunction.window_for(complex_), name=epsilon.name)


class CounitCone(NamedTuple):
    """The cone of `ε_C` and, when the quotient has projective dimension one, its comparison with `Σ²C`."""

    complex: ChainComplex
    counit: ChainMap
    model: MinimalModel
    """Minimal model of the cone the comparison is computed on."""

    equivalence: Union[Equivalence, NotEquivalent, None] = None
    """Equivalence `cone(ε_C) -> Σ²C`, or `None` when the projective dimension is not one."""


def cone_of_counit(adjunction: Adjunction, complex_: ChainComplex) -> CounitCone:
    """Cone of the counit `ε_C`, compared with `Σ²C` when `pd_Q R = 1`.

    A failed comparison under projective dimension one is returned as `NotEquivalent` rather than raised.
    """
    epsilon = _counit_on_window(adjunction, complex_)
    cone_ = cone(epsilon)
    model = minimal_model(cone_)
    if adjunction.projective_dimension != 1:
        return CounitCone(cone_, epsilon, model)

    target = shift(complex_, 2)
    lo, hi = cone_.window.shrink()
    if target.periodicity is None:
        lo, hi = Window(lo, hi).intersect(target.window.shrink())

    equivalence = find_equivalence(model.complex, target, window=(lo, hi), settings=adjunction.settings)
    if isinstance(equivalence, Equivalence):
        # Transport to the cone itself
        equivalence = equivalence._replace(
            forward=equivalence.forward @ model.projection,
            backward=model.inclusion @ equivalence.backward,
        )
    else:
        logger.warning("Cone of the counit is not equivalent to the double shift: %s", equivalence.reason)

    return CounitCone(cone_, epsilon, model, equivalence)


def fiber_projection(f: ChainMap) -> tuple[ChainComplex, ChainMap]:
    """The complex `Σ^-1 cone(f)` and its projection onto the source of `f: X -> Y`.

    In degree `n` the fiber is `Y_{n+1} ⊕ X_n` and the projection is `(0 1)`.
    """
    fiber = shift(cone(f), -1)
    source, target = f.source, f.target
    ring = f.ring

    def component(n: int) -> FreeMap:
        rank = source.rank(n)
        return FreeMap.block([[FreeMap.zero(ring, rank, target.rank(n + 1)), FreeMap.identity(ring, rank)]])

    return fiber, ChainMap(fiber, source, {n: component(n) for n in fiber.window.degrees()}, window=fiber.window)


class TriangleStep(NamedTuple):
    """One level `B_i -> B_{i-1}` of the tower, where `B_{-1}` is `C`."""

    complex: ChainComplex
    """The approximation `B_i`."""

    map: ChainMap
    """The map `B_i -> B_{i-1}`."""

    fiber: ChainComplex
    """The complex `X_i` approximated at this level; `C` itself at level zero."""

    counit: ChainMap
    """The approximation `B_i -> X_i`, whose fiber is approximated at the next level."""


def triangle_resolution(adjunction: Adjunction, complex_: ChainComplex, depth: int) -> list[TriangleStep]:
    """Tower `B_depth -> ... -> B_0 -> C` of iterated right approximations.

    `B_0 -> C` is the counit. Level `i` approximates `X_i = Σ^-1 cone(B_{i-1} -> X_{i-1})`, and its map
    to `B_{i-1}` is that counit followed by the projection of the fiber, so consecutive maps compose to zero
    up to homotopy. The materialized windows lose one degree at the top per level.

    Raises:
        ValueError: If the depth is negative.
    """
    if depth < 0:
        msg = f"Depth must be non-negative, got {depth}"
        raise ValueError(msg)

    epsilon = _counit_on_window(adjunction, complex_)
    steps = [TriangleStep(epsilon.source, epsilon, complex_, epsilon)]
    for level in tqdm(range(1, depth + 1), desc="Triangle tower", disable=not adjunction.settings.progress):
        fiber, projection = fiber_projection(steps[-1].counit)
        counit = _counit_on_window(adjunction, fiber)
        steps.append(TriangleStep(counit.source, projection @ counit, fiber, counit))
        logger.debug("Level %d of the tower has ranks %s", level, counit.source.ranks(counit.window))

    return steps


def triangle_checks(adjunction: Adjunction, steps: list[TriangleStep]) -> list[CheckReport]:
    """Check that consecutive maps compose to zero up to homotopy.

    When `pd_Q R = 1`, also compare each `B_i` with `Σ^-i B_0`.
    """
    reports = []
    for level in range(1, len(steps)):
        later, earlier = steps[level].map, steps[level - 1].map
        composite = earlier @ later
        zero = ChainMap.zero(composite.source, composite.target)
        reports.append(homotopy_report(f"composite at level {level}", composite, zero, composite.window.shrink()))

    if adjunction.projective_dimension == 1:
        first = steps[0].complex
        for level in range(1, len(steps)):
            name = f"level {level} against the shifted approximation"
            if first.is_zero() and steps[level].complex.is_zero():
                reports.append(CheckReport(name, passed=True, detail="both complexes are zero"))
                continue

            reports.append(
                equivalence_report(
                    name,
                    steps[level].complex,
                    shift(first, -level),
                    adjunction.settings,
                    adjunction.window.shrink(),
                )
            )

    return reports
