"""Executable checks of the functor laws, up to homotopy where the forgetful functor is involved."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from tac_approx.complexes import ChainMap, NotHomotopic, base_change, shift
from tac_approx.resolution import NotEquivalent, find_equivalence, find_homotopy

from .adjunction import Adjunction

if TYPE_CHECKING:
    from tac_approx.algebra import QuotientRing
    from tac_approx.complexes import ChainComplex
    from tac_approx.settings import Settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one law check; falsy when the law failed."""

    name: str
    passed: bool
    detail: str = ""
    degree: int | None = None

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        verdict = "holds" if self.passed else "fails"
        text = f"{self.name}: {verdict}"
        if self.degree is not None:
            text += f" (degree {self.degree})"

        return f"{text}; {self.detail}" if self.detail else text


def homotopy_report(name: str, f: ChainMap, g: ChainMap, window: tuple[int, int]) -> CheckReport:
    """Report whether `f` and `g` are homotopic on a window."""
    result = find_homotopy(f, g, window)
    if isinstance(result, NotHomotopic):
        logger.info("%s fails in degree %d: %s", name, result.degree, result.reason)
        return CheckReport(name, passed=False, detail=result.reason, degree=result.degree)

    return CheckReport(name, passed=True)


def equivalence_report(
    name: str,
    source: ChainComplex,
    target: ChainComplex,
    settings: Settings,
    window: tuple[int, int],
) -> CheckReport:
    """Report whether two complexes are homotopy equivalent on a window."""
    result = find_equivalence(source, target, window=window, settings=settings)
    if isinstance(result, NotEquivalent):
        logger.info("%s fails: %s", name, result.reason)
        return CheckReport(name, passed=False, detail=result.reason, degree=result.degree)

    return CheckReport(name, passed=True)


def _inner(adjunction: Adjunction) -> tuple[int, int]:
    lo, hi = adjunction.window
    return (lo + 1, hi - 1)


def triangle_identities(
    adjunction: Adjunction,
    complex_: ChainComplex,
    base_complex: ChainComplex,
) -> list[CheckReport]:
    """Check `Tε_C ∘ η_TC ~ id_TC` and `ε_SD ∘ Sη_D ~ id_SD`.

    Args:
        adjunction: Functors to check.
        complex_: Totally acyclic complex `C` over the quotient ring.
        base_complex: Totally acyclic complex `D` over the base ring.
    """
    image = adjunction.apply_T(complex_).complex
    left = adjunction.apply_T_morphism(adjunction.counit(complex_)) @ adjunction.unit_completion(image)
    reduced = adjunction.apply_S(base_complex)
    right = adjunction.counit(reduced) @ adjunction.apply_S_morphism(adjunction.unit_completion(base_complex))
    return [
        homotopy_report("T counit after unit", ChainMap.identity(image), left, _inner(adjunction)),
        homotopy_report("counit after S unit", ChainMap.identity(reduced), right, _inner(adjunction)),
    ]


def naturality_check(adjunction: Adjunction, f: ChainMap) -> CheckReport:
    """Check the naturality square of the counit for a map over `R`, or of the unit for a map over `Q`."""
    if f.ring == adjunction.ring:
        around = adjunction.counit(f.target) @ adjunction.apply_S_morphism(adjunction.apply_T_morphism(f))
        across = f @ adjunction.counit(f.source)
        return homotopy_report("counit naturality", around, across, _inner(adjunction))

    around = adjunction.unit_completion(f.target) @ f
    across = adjunction.apply_T_morphism(adjunction.apply_S_morphism(f)) @ adjunction.unit_completion(f.source)
    return homotopy_report("unit naturality", around, across, _inner(adjunction))


def functoriality_check(adjunction: Adjunction, f: ChainMap, g: ChainMap) -> CheckReport:
    """Check `F(g ∘ f)` against `F(g) ∘ F(f)`: exactly for `S`, up to homotopy for `T`."""
    if f.ring == adjunction.base:
        exact = adjunction.apply_S_morphism(g @ f) == adjunction.apply_S_morphism(g) @ adjunction.apply_S_morphism(f)
        return CheckReport("S preserves composition", passed=exact)

    return homotopy_report(
        "T preserves composition",
        adjunction.apply_T_morphism(g @ f),
        adjunction.apply_T_morphism(g) @ adjunction.apply_T_morphism(f),
        _inner(adjunction),
    )


def shift_compatibility(adjunction: Adjunction, complex_: ChainComplex) -> CheckReport:
    """Check `T(Σ^-1 C) ≃ Σ^-1 (TC)`."""
    shifted_image = adjunction.apply_T(shift(complex_, -1)).complex
    image_shifted = shift(adjunction.apply_T(complex_).complex, -1)
    return equivalence_report(
        "T commutes with the shift",
        shifted_image,
        image_shifted,
        adjunction.settings,
        _inner(adjunction),
    )


def compose_functors_check(
    tower: tuple[QuotientRing, QuotientRing, QuotientRing],
    base_complex: ChainComplex,
    complex_: ChainComplex,
    settings: Settings | None = None,
) -> list[CheckReport]:
    """Compare the functors of a composite quotient `Q -> R' -> R` with the composites of its steps.

    Base change is compared exactly on `D`; the forgetful functors are compared up to homotopy
    equivalence on `C`.
    """
    base, middle, top = tower
    lower = Adjunction(base, middle, settings)
    upper = Adjunction(middle, top, settings)
    whole = Adjunction(base, top, lower.settings)

    in_steps = base_change(base_change(base_complex, middle), top)
    s_report = CheckReport("S of a composite", passed=in_steps == whole.apply_S(base_complex, check=False))

    t_whole = whole.apply_T(complex_).complex
    t_steps = lower.apply_T(upper.apply_T(complex_).complex).complex
    t_report = equivalence_report("T of a composite", t_whole, t_steps, whole.settings, _inner(whole))
    return [s_report, t_report]
