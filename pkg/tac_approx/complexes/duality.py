from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

from .chain_map import ChainMap
from .constructions import base_change, dualize
from .errors import ShapeMismatchError

if TYPE_CHECKING:
    from tac_approx.algebra import QuotientRing

    from .complex import ChainComplex


class DualBaseChange(NamedTuple):
    """Mutually inverse maps between `Hom(C, Q) ⊗ R` and `Hom(C ⊗ R, R)`."""

    forward: ChainMap
    backward: ChainMap


def dual_base_change_iso(complex_: ChainComplex, ring: QuotientRing) -> DualBaseChange:
    """Canonical identification of the two ways of dualizing and changing rings.

    On free modules with their standard bases both complexes have the same matrices, so the maps are
    identities in every degree.

    Raises:
        ShapeMismatchError: If the two complexes differ on the chosen bases.
    """
    dual_then_change = base_change(dualize(complex_), ring)
    change_then_dual = dualize(base_change(complex_, ring))
    if dual_then_change != change_then_dual:
        msg = "Dualizing does not commute with base change on the standard bases"
        raise ShapeMismatchError(msg)

    identity = dict(ChainMap.identity(dual_then_change).items())
    periodicity = dual_then_change.periodicity
    return DualBaseChange(
        ChainMap(dual_then_change, change_then_dual, identity, periodicity=periodicity),
        ChainMap(change_then_dual, dual_then_change, identity, periodicity=periodicity),
    )
