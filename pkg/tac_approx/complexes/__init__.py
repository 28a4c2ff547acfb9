from tac_approx.algebra import FreeMap, ModulePresentation

from .acyclicity import AcyclicityReport, Side, is_exact_at, total_acyclicity_check
from .chain_map import ChainMap, Homotopy, NotHomotopic
from .complex import ChainComplex, Periodicity, ValidationReport, Window, validate_complex, validated
from .constructions import (
    base_change,
    base_change_map,
    cone,
    direct_sum,
    dualize,
    dualize_map,
    shift,
    shift_map,
    tensor_complexes,
    truncated_cone,
)
from .duality import DualBaseChange, dual_base_change_iso
from .errors import (
    ComplexError,
    InvalidComplexError,
    NotSurjectiveError,
    ShapeMismatchError,
    UnboundedComplexError,
    WindowMismatchError,
)
from .minimal import MinimalModel, minimal_model

__all__ = (
    "AcyclicityReport",
    "ChainComplex",
    "ChainMap",
    "ComplexError",
    "DualBaseChange",
    "FreeMap",
    "Homotopy",
    "InvalidComplexError",
    "MinimalModel",
    "ModulePresentation",
    "NotHomotopic",
    "NotSurjectiveError",
    "Periodicity",
    "ShapeMismatchError",
    "Side",
    "UnboundedComplexError",
    "ValidationReport",
    "Window",
    "WindowMismatchError",
    "base_change",
    "base_change_map",
    "cone",
    "direct_sum",
    "dual_base_change_iso",
    "dualize",
    "dualize_map",
    "is_exact_at",
    "minimal_model",
    "shift",
    "shift_map",
    "tensor_complexes",
    "total_acyclicity_check",
    "truncated_cone",
    "validate_complex",
    "validated",
)
