from .adjunction import Adjunction, ForgetfulImage, TSIdentification
from .checks import (
    CheckReport,
    compose_functors_check,
    equivalence_report,
    functoriality_check,
    homotopy_report,
    naturality_check,
    shift_compatibility,
    triangle_identities,
)
from .errors import FunctorError, InfiniteProjectiveDimensionError, NotTotallyAcyclicError

__all__ = (
    "Adjunction",
    "CheckReport",
    "ForgetfulImage",
    "FunctorError",
    "InfiniteProjectiveDimensionError",
    "NotTotallyAcyclicError",
    "TSIdentification",
    "compose_functors_check",
    "equivalence_report",
    "functoriality_check",
    "homotopy_report",
    "naturality_check",
    "shift_compatibility",
    "triangle_identities",
)
