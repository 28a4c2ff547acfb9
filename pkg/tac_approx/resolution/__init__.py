from .complete import (
    CompleteResolution,
    MCMSyzygy,
    ResolutionPath,
    complete_resolution,
    mcm_syzygy,
)
from .equivalence import Equivalence, NotEquivalent, degree_zero_module, find_equivalence
from .errors import LiftError, PeriodicityNotFoundError, ResolutionError, SpliceError
from .free import (
    kernel_generators,
    minimal_free_resolution,
    projective_dimension,
    restrict_scalars,
    ring_resolution,
)
from .homotopy import find_homotopy
from .kernel import OmegaResolution, omega_resolution, truncated_cone_resolution
from .lifting import comparison_map, extend_morphism, lift_through
from .periodicity import PeriodicTail, detect_periodicity

__all__ = (
    "CompleteResolution",
    "Equivalence",
    "LiftError",
    "MCMSyzygy",
    "NotEquivalent",
    "OmegaResolution",
    "PeriodicTail",
    "PeriodicityNotFoundError",
    "ResolutionError",
    "ResolutionPath",
    "SpliceError",
    "comparison_map",
    "complete_resolution",
    "degree_zero_module",
    "detect_periodicity",
    "extend_morphism",
    "find_equivalence",
    "find_homotopy",
    "kernel_generators",
    "lift_through",
    "mcm_syzygy",
    "minimal_free_resolution",
    "omega_resolution",
    "projective_dimension",
    "restrict_scalars",
    "ring_resolution",
    "truncated_cone_resolution",
)
