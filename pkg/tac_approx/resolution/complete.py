"""Complete resolutions: totally acyclic complexes agreeing with a free resolution in high degrees."""

from __future__ import annotations

import logging
from enum import Enum
from typing import TYPE_CHECKING, NamedTuple, Optional

from tac_approx.algebra import FreeMap, ModulePresentation, RingClass, UnsupportedRingError, syzygies
from tac_approx.complexes import ChainComplex, ChainMap, Periodicity, is_exact_at
from tac_approx.settings import Settings

from .errors import PeriodicityNotFoundError, SpliceError
from .free import minimal_free_resolution, projective_dimension
from .lifting import extend_morphism
from .periodicity import PeriodicTail, detect_periodicity

if TYPE_CHECKING:
    from tac_approx.algebra import QuotientRing

logger = logging.getLogger(__name__)


class ResolutionPath(str, Enum):
    """How a complete resolution is built."""

    FINITE = "finite"
    """Finite projective dimension; the complete resolution is zero."""

    PERIODIC = "periodic"
    """Periodic tail of the minimal resolution, wrapped in both directions."""

    SPLICE = "splice"
    """High syzygy spliced with the dual of a resolution of its dual."""


class MCMSyzygy(NamedTuple):
    """Syzygy module `N = image of d_shift` of a resolution, maximal Cohen-Macaulay over Gorenstein rings."""

    module: ModulePresentation
    shift: int
    resolution: ChainComplex


class CompleteResolution(NamedTuple):
    """Totally acyclic complex `U` with a comparison map `rho: U -> F` to a resolution.

    `rho_n` is the identity for every `n >= agreement_degree`.
    """

    complex: ChainComplex
    resolution: ChainComplex
    comparison: ChainMap
    path: ResolutionPath
    agreement_degree: Optional[int] = None
    projective_dimension: Optional[int] = None
    tail: Optional[PeriodicTail] = None


def mcm_syzygy(module: ModulePresentation, *, settings: Settings | None = None) -> MCMSyzygy:
    """Syzygy of `module` in degree `nvars + 1`, presented as the cokernel of the next differential.

    Modules of small projective dimension give the zero syzygy with the same shift.
    """
    settings = settings or Settings()
    depth = module.ring.nvars + 1
    resolution = minimal_free_resolution(module, depth + 1, progress=settings.progress)
    return MCMSyzygy(ModulePresentation(resolution.differential(depth + 1)), depth, resolution)


def complete_resolution(
    module: ModulePresentation,
    settings: Settings | None = None,
    *,
    window: tuple[int, int] | None = None,
    path: ResolutionPath | None = None,
) -> CompleteResolution:
    """Complete resolution of a module over a Gorenstein quotient ring.

    Hypersurfaces use the periodic tail of the minimal resolution; artinian and complete intersection
    rings splice a high syzygy with the dual of a resolution of its dual. Either route may be forced
    with `path`.

    Args:
        module: Module to resolve.
        settings: Resolution lengths and progress display.
        window: Degrees the result should cover when it is not periodic.
        path: Route to take instead of the one chosen from the ring's class.

    Raises:
        UnsupportedRingError: If the ring is not regular, a hypersurface, artinian Gorenstein or a
            complete intersection.
        PeriodicityNotFoundError: If the periodic route finds no period within the resolution length.
        SpliceError: If the splice is not exact, which happens over non Gorenstein rings.
    """
    settings = settings or Settings()
    ring = module.ring
    window = window or settings.default_window
    if path is None:
        path = _default_path(ring)

    logger.info("Completing a resolution over %s by the %s route", ring.describe(), path.value)
    if path == ResolutionPath.SPLICE:
        return _splice(module, settings, window)

    return _periodic(module, settings, window)


def _default_path(ring: QuotientRing) -> ResolutionPath:
    classification = ring.classification
    if classification in (RingClass.REGULAR, RingClass.HYPERSURFACE):
        return ResolutionPath.PERIODIC

    if classification in (RingClass.ARTINIAN, RingClass.COMPLETE_INTERSECTION):
        return ResolutionPath.SPLICE

    msg = f"Complete resolutions over {ring.describe()} are not supported"
    raise UnsupportedRingError(msg)


def _finite(resolution: ChainComplex, window: tuple[int, int], dimension: int) -> CompleteResolution:
    zero = ChainComplex.zero(resolution.ring, window, name="U")
    return CompleteResolution(
        zero,
        resolution,
        ChainMap.zero(zero, resolution),
        ResolutionPath.FINITE,
        projective_dimension=dimension,
    )


def _comparison(complex_: ChainComplex, resolution: ChainComplex, agreement: int) -> ChainMap:
    """Identity from the agreement degree upward, extended down to degree zero."""
    hi = resolution.window.hi
    top = ChainMap(
        complex_,
        resolution,
        {n: FreeMap.identity(resolution.ring, resolution.rank(n)) for n in range(agreement, hi + 1)},
        window=(agreement, hi),
        name="rho",
    )
    return extend_morphism(top, agreement - 1, lo=0)


def _periodic(module: ModulePresentation, settings: Settings, window: tuple[int, int]) -> CompleteResolution:
    length = max(settings.max_resolution_length, window[1])
    resolution = minimal_free_resolution(module, length, progress=settings.progress)
    dimension = projective_dimension(resolution)
    if dimension is not None:
        return _finite(resolution, window, dimension)

    tail = detect_periodicity(resolution)
    if tail is None:
        msg = (
            f"No period of length at most 2 within {length} degrees of the resolution; "
            "try the splice route or a longer resolution"
        )
        raise PeriodicityNotFoundError(msg)

    period, onset = tail
    lo = onset - 1
    complex_ = ChainComplex(
        module.ring,
        (lo, lo + 2 * period),
        {n: resolution.differential(n) for n in range(lo + 1, lo + 2 * period + 1)},
        ranks={n: resolution.rank(n) for n in range(lo, lo + 2 * period + 1)},
        periodicity=Periodicity(period),
        name="U",
    )
    return CompleteResolution(
        complex_,
        resolution,
        _comparison(complex_, resolution, lo),
        ResolutionPath.PERIODIC,
        agreement_degree=lo,
        tail=tail,
    )


def _splice(module: ModulePresentation, settings: Settings, window: tuple[int, int]) -> CompleteResolution:
    depth = module.ring.nvars + 1
    lo, hi = min(window[0], depth - 2), max(window[1], depth + 1)
    resolution = minimal_free_resolution(module, hi, progress=settings.progress)
    dimension = projective_dimension(resolution)
    if dimension is not None:
        return _finite(resolution, window, dimension)

    # Generators of the dual of N = coker d_{depth+1}, and a resolution P of that dual
    dual_generators = syzygies(resolution.differential(depth + 1).transpose())
    change = ModulePresentation(syzygies(dual_generators)).minimal()
    dual_generators = dual_generators @ change.section
    dual_resolution = minimal_free_resolution(change.presentation, depth - 1 - lo, progress=settings.progress)

    differentials = {n: resolution.differential(n) for n in range(depth + 1, hi + 1)}
    differentials[depth] = dual_generators.transpose()
    for j in range(1, depth - lo):
        differentials[depth - j] = dual_resolution.differential(j).transpose()

    ranks = {n: resolution.rank(n) for n in range(depth, hi + 1)}
    ranks.update({depth - 1 - j: dual_resolution.rank(j) for j in range(depth - lo)})
    complex_ = ChainComplex(module.ring, (lo, hi), differentials, ranks=ranks, name="U")
    for n in (depth, depth - 1):
        if not is_exact_at(complex_, n):
            msg = f"Splice is not exact in degree {n}; the syzygy is not reflexive, so the ring is not Gorenstein"
            raise SpliceError(msg)

    return CompleteResolution(
        complex_,
        resolution,
        _comparison(complex_, resolution, depth),
        ResolutionPath.SPLICE,
        agreement_degree=depth,
    )
