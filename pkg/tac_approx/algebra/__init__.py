from .errors import (
    AlgebraError,
    NotInvertibleError,
    PolynomialParseError,
    RankMismatchError,
    RingMismatchError,
    UnsupportedRingError,
)
from .field import DEFAULT_MODULUS, FieldElement
from .free_map import FreeMap
from .groebner import NotMember, Submodule, buchberger, membership_with_witness, normal_form, prune_generators
from .linear import inverse, matrix_equation_kernel, solve, solve_left, solve_matrix_equation, syzygies
from .module import ModulePresentation, PresentationChange
from .parsing import format_polynomial, parse_polynomial
from .polynomial import Monomial, Polynomial, monomial_key
from .ring import QuotientRing, RingClass
from .vector import VectorElement

__all__ = (
    "DEFAULT_MODULUS",
    "AlgebraError",
    "FieldElement",
    "FreeMap",
    "ModulePresentation",
    "Monomial",
    "NotInvertibleError",
    "NotMember",
    "Polynomial",
    "PolynomialParseError",
    "PresentationChange",
    "QuotientRing",
    "RankMismatchError",
    "RingClass",
    "RingMismatchError",
    "Submodule",
    "UnsupportedRingError",
    "VectorElement",
    "buchberger",
    "format_polynomial",
    "inverse",
    "matrix_equation_kernel",
    "membership_with_witness",
    "monomial_key",
    "normal_form",
    "parse_polynomial",
    "prune_generators",
    "solve",
    "solve_left",
    "solve_matrix_equation",
    "syzygies",
)
