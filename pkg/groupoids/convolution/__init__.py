"""The convolution algebra C_c(G), exact scalars and Lamperti elements."""

from .scalars import CyclotomicNumber, Scalar, ONE, ZERO, to_scalar, scalar_abs, scalar_is_zero
from .circle import CircleScalar, CircleFunction
from .algebra import (
    AlgebraElement,
    zero,
    delta,
    indicator,
    unit_element,
    diagonal,
    support,
    convolve,
)
from .lamperti import (
    LampertiElement,
    compose_lamperti,
    semidirect_multiply,
    circle_angle,
    decompose_partial_isometry,
    decompose_isometry,
    sigma,
    pi0_class,
)

__all__ = [
    "CyclotomicNumber",
    "Scalar",
    "ONE",
    "ZERO",
    "to_scalar",
    "scalar_abs",
    "scalar_is_zero",
    "CircleScalar",
    "CircleFunction",
    "AlgebraElement",
    "zero",
    "delta",
    "indicator",
    "unit_element",
    "diagonal",
    "support",
    "convolve",
    "LampertiElement",
    "compose_lamperti",
    "semidirect_multiply",
    "circle_angle",
    "decompose_partial_isometry",
    "decompose_isometry",
    "sigma",
    "pi0_class",
]
