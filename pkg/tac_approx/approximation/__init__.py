from .left import LeftApproximation, left_approximation, left_factorization, left_factorization_check
from .minimality import MinimalityVerdict, SplitCounit, minimality_witness, split_counit
from .right import RightApproximation, right_approximation, right_factorization, right_factorization_check
from .triangles import (
    CounitCone,
    TriangleStep,
    cone_of_counit,
    fiber_projection,
    triangle_checks,
    triangle_resolution,
)

__all__ = (
    "CounitCone",
    "LeftApproximation",
    "MinimalityVerdict",
    "RightApproximation",
    "SplitCounit",
    "TriangleStep",
    "cone_of_counit",
    "fiber_projection",
    "left_approximation",
    "left_factorization",
    "left_factorization_check",
    "minimality_witness",
    "right_approximation",
    "right_factorization",
    "right_factorization_check",
    "split_counit",
    "triangle_checks",
    "triangle_resolution",
)
