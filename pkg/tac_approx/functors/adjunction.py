"""The adjoint pair of base change `S` and forgetful `T` between totally acyclic complexes.

`S` sends a complex over the base ring `Q` to its reduction over the quotient ring `R`. `T` sends a
complex over `R` to a complete resolution over `Q` of its degree zero image. Objects of `T` are
specific minimal representatives, so statements about `T` hold up to homotopy.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple, Union

from tac_approx.algebra import FreeMap, RingMismatchError
from tac_approx.complexes import (
    ChainComplex,
    ChainMap,
    MinimalModel,
    Window,
    base_change,
    base_change_map,
    minimal_model,
    tensor_complexes,
    total_acyclicity_check,
)
from tac_approx.resolution import (
    CompleteResolution,
    Equivalence,
    NotEquivalent,
    ResolutionPath,
    complete_resolution,
    degree_zero_module,
    extend_morphism,
    find_equivalence,
    lift_through,
    projective_dimension,
    restrict_scalars,
    ring_resolution,
)
from tac_approx.settings import Settings

from .errors import InfiniteProjectiveDimensionError, NotTotallyAcyclicError

if TYPE_CHECKING:
    from tac_approx.algebra import PresentationChange, QuotientRing

logger = logging.getLogger(__name__)


class ForgetfulImage(NamedTuple):
    """Result of `T` on an object."""

    complex: ChainComplex
    """The complex `TC` over the base ring."""

    completion: CompleteResolution
    """Complete resolution data, including the comparison map to the free resolution."""

    presentation: PresentationChange
    """Minimalization of the degree zero module read over the base ring."""


class TSIdentification(NamedTuple):
    """Homotopy equivalence between `D ⊗ K` and `TSD`."""

    forward: ChainMap
    backward: ChainMap
    equivalence: Equivalence
    model: MinimalModel
    """Minimal model of `D ⊗ K` the equivalence was found on."""


class Adjunction:
    """Base change and forgetful functors for a quotient `base -> ring` of finite projective dimension."""

    def __init__(self, base: QuotientRing, ring: QuotientRing, settings: Settings | None = None) -> None:
        """Initialize the adjunction.

        Args:
            base: Gorenstein ring `Q`.
            ring: Quotient `R` of `Q`.
            settings: Windows and resolution lengths.

        Raises:
            RingMismatchError: If `ring` is not a quotient of `base`.
            InfiniteProjectiveDimensionError: If `R` has no finite resolution over `Q`.
        """
        if not ring.is_quotient_of(base):
            msg = f"{ring.describe()} is not a quotient of {base.describe()}"
            raise RingMismatchError(msg)

        self.base = base
        self.ring = ring
        self.settings = settings or Settings()
        resolution = ring_resolution(base, ring, self.settings.max_resolution_length)
        dimension = projective_dimension(resolution)
        if dimension is None:
            msg = f"{ring.describe()} has no finite free resolution over {base.describe()}"
            raise InfiniteProjectiveDimensionError(msg)

        self.projective_dimension = dimension
        self.resolution = resolution.restrict((0, dimension))
        self._images: dict[ChainComplex, ForgetfulImage] = {}

    @property
    def window(self) -> Window:
        return Window(*self.settings.default_window)

    def window_for(self, complex_: ChainComplex) -> Window:
        """Degrees where maps out of or into a complex are computed."""
        return self.window if complex_.periodicity is not None else complex_.window

    # Base change
    # ------------------------------------------------------------------------
    def apply_S(self, complex_: ChainComplex, *, check: bool = True) -> ChainComplex:
        """The complex `D ⊗ R`, checked for total acyclicity on its window.

        Raises:
            NotTotallyAcyclicError: If the reduced complex has homology, which means the input was not
                totally acyclic.
        """
        if complex_.ring != self.base:
            msg = f"Base change expects a complex over {self.base.describe()}"
            raise RingMismatchError(msg)

        reduced = base_change(complex_, self.ring)
        if check:
            report = total_acyclicity_check(reduced, self.window_for(reduced))
            if not report:
                msg = f"Base change of {complex_.name or 'the complex'} is {report.describe()}"
                raise NotTotallyAcyclicError(msg)

        return reduced

    def apply_S_morphism(self, f: ChainMap) -> ChainMap:
        return base_change_map(f, self.ring)

    # Forgetful functor
    # ------------------------------------------------------------------------
    def apply_T(self, complex_: ChainComplex) -> ForgetfulImage:
        """Complete resolution over the base ring of the degree zero image of a complex over `R`."""
        if complex_.ring != self.ring:
            msg = f"The forgetful functor expects a complex over {self.ring.describe()}"
            raise RingMismatchError(msg)

        if (image := self._images.get(complex_)) is not None:
            return image

        change = restrict_scalars(degree_zero_module(complex_), self.base).minimal()
        completion = complete_resolution(change.presentation, self.settings, window=self.window)
        image = ForgetfulImage(completion.complex, completion, change)
        self._images[complex_] = image
        logger.info("T of %s has ranks %s", complex_.name or "a complex", image.complex.ranks(self.window))
        return image

    def _into_completion(self, to_resolution: ChainMap, image: ForgetfulImage) -> ChainMap:
        """Map into `TC` that agrees with a map into the free resolution from the agreement degree on."""
        a = image.completion.agreement_degree
        top = to_resolution.window.hi
        partial = ChainMap(
            to_resolution.source,
            image.complex,
            {n: to_resolution.component(n) for n in range(a, top + 1)},
            window=(a, top),
        )
        return extend_morphism(partial, a - 1, lo=self.window_for(to_resolution.source).lo)

    def apply_T_morphism(self, f: ChainMap) -> ChainMap:
        """The comparison map `TC -> TC'` inducing the degree zero map of `f`."""
        source, target = self.apply_T(f.source), self.apply_T(f.target)
        if ResolutionPath.FINITE in (source.completion.path, target.completion.path):
            return ChainMap.zero(source.complex, target.complex)

        alpha = target.presentation.projection @ f.component(0).over(self.base) @ source.presentation.section
        lifted = lift_through(
            alpha,
            source.completion.resolution,
            target.completion.resolution,
            top=self.window.hi,
        )
        return self._into_completion(lifted @ source.completion.comparison, target)

    # Unit and counit
    # ------------------------------------------------------------------------
    def unit(self, complex_: ChainComplex) -> ChainMap:
        """Inclusion `D -> D ⊗ K` of the summands `D_n ⊗ K_0`."""
        tensor = tensor_complexes(complex_, self.resolution)
        ring = self.base

        def component(n: int) -> FreeMap:
            rank = complex_.rank(n)
            return FreeMap.block(
                [[FreeMap.identity(ring, rank)], [FreeMap.zero(ring, tensor.rank(n) - rank, rank)]]
            )

        return ChainMap(
            complex_,
            tensor,
            {n: component(n) for n in complex_.window.degrees()},
            window=complex_.window,
            periodicity=complex_.periodicity,
            name="eta",
        )

    def unit_completion(self, complex_: ChainComplex) -> ChainMap:
        """Unit `D -> TSD`, lifting the quotient map from the degree zero image of `D` to its reduction."""
        image = self.apply_T(self.apply_S(complex_, check=False))
        if image.completion.path is ResolutionPath.FINITE:
            return ChainMap.zero(complex_, image.complex)

        lifted = lift_through(
            image.presentation.projection,
            complex_,
            image.completion.resolution,
            top=self.window_for(complex_).hi,
        )
        return self._into_completion(lifted, image)

    def counit(self, complex_: ChainComplex) -> ChainMap:
        """Counit `STC -> C` induced by the comparison of the free resolution with `C` in degrees `>= 0`."""
        image = self.apply_T(complex_)
        source = self.apply_S(image.complex, check=False)
        if image.completion.path is ResolutionPath.FINITE:
            return ChainMap.zero(source, complex_)

        lo, hi = self.window_for(complex_)
        comparison = image.completion.comparison
        lifted = lift_through(
            image.presentation.section.over(self.ring),
            base_change(image.completion.resolution, self.ring),
            complex_,
            top=hi,
        )
        top = ChainMap(
            source,
            complex_,
            {n: lifted.component(n) @ comparison.component(n).over(self.ring) for n in range(hi + 1)},
            window=(0, hi),
            name="epsilon",
        )
        return extend_morphism(top, -1, lo=lo)

    # Adjunction isomorphism
    # ------------------------------------------------------------------------
    def adjunction_forward(self, g: ChainMap, target: ChainComplex) -> ChainMap:
        """The map `SD -> C` adjoint to `g: D -> TC`, namely `ε_C ∘ S[g]`."""
        return self.counit(target) @ self.apply_S_morphism(g)

    def adjunction_backward(self, f: ChainMap, source: ChainComplex) -> ChainMap:
        """The map `D -> TC` adjoint to `f: SD -> C`, namely `T[f] ∘ η_D`."""
        return self.apply_T_morphism(f) @ self.unit_completion(source)

    def ts_identification(self, complex_: ChainComplex) -> Union[TSIdentification, NotEquivalent]:
        """Homotopy equivalence between `D ⊗ K` and `TSD`, found on a minimal model of the tensor product."""
        lo, hi = self.window
        model = minimal_model(tensor_complexes(complex_, self.resolution), (lo - 2, hi + 2))
        image = self.apply_T(self.apply_S(complex_, check=False))
        equivalence = find_equivalence(model.complex, image.complex, window=(lo, hi), settings=self.settings)
        if isinstance(equivalence, NotEquivalent):
            return equivalence

        return TSIdentification(
            equivalence.forward @ model.projection,
            model.inclusion @ equivalence.backward,
            equivalence,
            model,
        )
