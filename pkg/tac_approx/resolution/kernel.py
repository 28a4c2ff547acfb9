"""Resolutions of kernels through truncated mapping cones."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple

from tac_approx.algebra import FreeMap, ModulePresentation
from tac_approx.complexes import ChainComplex, ChainMap, direct_sum, shift, truncated_cone
from tac_approx.settings import Settings

from .errors import ResolutionError
from .free import minimal_free_resolution, projective_dimension, restrict_scalars, ring_resolution
from .lifting import lift_through

if TYPE_CHECKING:
    from tac_approx.algebra import QuotientRing

logger = logging.getLogger(__name__)


def truncated_cone_resolution(f: ChainMap) -> ChainComplex:
    """Resolution `Σ^{-1} trcone(f)` of the kernel of the surjection lifted by `f`.

    The result starts in degree zero and records `coker d_1`, the kernel, as its augmentation.

    Raises:
        NotSurjectiveError: If `f_0` is not surjective modulo the maximal ideal.
    """
    shifted = shift(truncated_cone(f), -1)
    return ChainComplex(
        f.ring,
        shifted.window,
        dict(shifted.items()),
        ranks=shifted.ranks(),
        augmentation=ModulePresentation(shifted.differential(1)),
        name="K",
    )


class OmegaResolution(NamedTuple):
    """Resolution over the base ring of the first syzygy over the quotient ring."""

    resolution: ChainComplex
    """The complex `Σ^{-1} trcone(phi)`."""

    lift: ChainMap
    """Lift `phi: K^mu -> F` of the identity on generators."""

    base_resolution: ChainComplex
    """Resolution `F` of the module over the base ring."""

    agreement_degree: int
    """From this degree on, `resolution` has the modules of `Σ^{-1} F`."""

    tail_agrees: bool
    """Whether ranks and differentials match `Σ^{-1} F` from the agreement degree on."""


def omega_resolution(
    module: ModulePresentation,
    base: QuotientRing,
    length: int,
    settings: Settings | None = None,
) -> OmegaResolution:
    """Resolve the first syzygy over `R = module.ring` of a module, as a module over `base`.

    With `K` the resolution of `R` over `base`, of length `c`, and `F` the resolution of the module over
    `base`, the identity on the `mu` generators lifts to `phi: K^mu -> F`, and `Σ^{-1} trcone(phi)`
    resolves the syzygy. It agrees with `Σ^{-1} F` in modules from degree `c + 1` and in differentials
    from degree `c + 2`.

    Raises:
        ResolutionError: If `R` has infinite projective dimension over `base`.
    """
    settings = settings or Settings()
    ring_res = ring_resolution(base, module.ring, settings.max_resolution_length)
    c = projective_dimension(ring_res)
    if c is None:
        msg = f"{module.ring.describe()} has no finite resolution over {base.describe()}"
        raise ResolutionError(msg)

    resolution = minimal_free_resolution(restrict_scalars(module, base), length + 1, progress=settings.progress)
    mu = resolution.rank(0)
    if mu == 0:
        zero = ChainComplex.zero(base, (0, length), name="K")
        return OmegaResolution(zero, ChainMap.zero(zero, resolution), resolution, c + 1, tail_agrees=True)

    lift = lift_through(FreeMap.identity(base, mu), direct_sum([ring_res] * mu), resolution)
    kernel = truncated_cone_resolution(lift)
    hi = kernel.window.hi
    tail_agrees = all(kernel.rank(n) == resolution.rank(n + 1) for n in range(c + 1, hi + 1)) and all(
        kernel.differential(n) == -resolution.differential(n + 1) for n in range(c + 2, hi + 1)
    )
    logger.info("Syzygy resolution agrees with the shifted resolution from degree %d: %s", c + 1, tail_agrees)
    return OmegaResolution(kernel, lift, resolution, c + 1, tail_agrees)
