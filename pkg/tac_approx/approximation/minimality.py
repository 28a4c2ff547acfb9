"""Right minimality of approximations, decided on minimal models."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

from tac_approx.algebra import FreeMap
from tac_approx.complexes import ChainMap, NotHomotopic, ShapeMismatchError, Window, minimal_model, tensor_complexes
from tac_approx.resolution import find_homotopy

if TYPE_CHECKING:
    from tac_approx.complexes import ChainComplex
    from tac_approx.functors import Adjunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinimalityVerdict:
    """Outcome of testing an endomorphism `f` of the source of `ε` against right minimality."""

    factors: bool
    """Whether `ε ∘ f ~ ε`."""

    equivalence: bool
    """Whether `f` is a homotopy equivalence."""

    degree: int | None = None
    """First degree where `f` fails to be invertible on the minimal model."""

    @property
    def witness(self) -> bool:
        """Whether `f` shows that `ε` is not right minimal."""
        return self.factors and not self.equivalence

    def describe(self) -> str:
        if self.witness:
            return f"not right minimal: f fixes the approximation and is not invertible in degree {self.degree}"

        if not self.factors:
            return "no witness: the approximation composed with f is not homotopic to the approximation"

        return "no witness: f is a homotopy equivalence"


def minimality_witness(epsilon: ChainMap, f: ChainMap, window: tuple[int, int] | None = None) -> MinimalityVerdict:
    """Test whether `f: X -> X` witnesses that `ε: X -> C` is not right minimal.

    An endomorphism of a minimal complex is a homotopy equivalence exactly when it is invertible in every
    degree, that is invertible modulo the maximal ideal. A non-minimal source is first replaced by its
    minimal model on the window.

    Args:
        epsilon: Approximation `ε: X -> C`.
        f: Endomorphism of `X`.
        window: Degrees to examine; defaults to the window of `ε`.

    Raises:
        ShapeMismatchError: If `f` is not an endomorphism of the source of `ε`.
    """
    lo, hi = Window(*(window or epsilon.window))
    source = epsilon.source
    ranks = source.ranks((lo, hi))
    if f.source.ranks((lo, hi)) != ranks or f.target.ranks((lo, hi)) != ranks:
        msg = "The map is not an endomorphism of the source of the approximation"
        raise ShapeMismatchError(msg)

    inner = (lo + 1, hi - 1)
    factors = not isinstance(find_homotopy(epsilon @ f, epsilon, inner), NotHomotopic)

    if source.restrict((lo, hi)).is_minimal():
        induced = f
    else:
        model = minimal_model(source, (lo, hi))
        induced = model.projection @ f @ model.inclusion

    degree = next((n for n in range(inner[0], inner[1] + 1) if not induced.component(n).is_invertible()), None)
    verdict = MinimalityVerdict(factors=factors, equivalence=degree is None, degree=degree)
    logger.info("Minimality test: %s", verdict.describe())
    return verdict


class SplitCounit(NamedTuple):
    """The counit of a reduced complex on the tensor model, with the block projection that fixes it."""

    complex: ChainComplex
    """The reduction of `D ⊗ K`."""

    counit: ChainMap
    """Projection onto the summands `SD_n ⊗ SK_0`, followed by the identification with `SD_n`."""

    projection: ChainMap
    """Endomorphism keeping the summands `SD_n ⊗ SK_0` and killing the rest."""


def split_counit(adjunction: Adjunction, base_complex: ChainComplex) -> SplitCounit:
    """Counit of `SD` on `S(D ⊗ K)` and the non-invertible endomorphism it absorbs.

    The Koszul part of the tensor differential reduces to zero, so the projection onto the first summands
    is a chain map and composing it with the counit changes nothing.
    """
    reduced = adjunction.apply_S(base_complex, check=False)
    tensor = adjunction.apply_S(tensor_complexes(base_complex, adjunction.resolution), check=False)
    ring = adjunction.ring

    def counit(n: int) -> FreeMap:
        rank = base_complex.rank(n)
        return FreeMap.block([[FreeMap.identity(ring, rank), FreeMap.zero(ring, rank, tensor.rank(n) - rank)]])

    def projection(n: int) -> FreeMap:
        rank, rest = base_complex.rank(n), tensor.rank(n) - base_complex.rank(n)
        return FreeMap.block(
            [
                [FreeMap.identity(ring, rank), FreeMap.zero(ring, rank, rest)],
                [FreeMap.zero(ring, rest, rank), FreeMap.zero(ring, rest, rest)],
            ]
        )

    window, periodicity = base_complex.window, base_complex.periodicity
    return SplitCounit(
        tensor,
        ChainMap(tensor, reduced, {n: counit(n) for n in window.degrees()}, window=window, periodicity=periodicity),
        ChainMap(tensor, tensor, {n: projection(n) for n in window.degrees()}, window=window, periodicity=periodicity),
    )
