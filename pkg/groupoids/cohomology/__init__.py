"""1-cocycles, coboundaries and H^1(G, T) with exact rational-angle coefficients."""

from .cocycles import Cocycle, is_cocycle, require_cocycle, coboundary
from .characters import (
    enumerate_characters,
    abelianization_factors,
    canonical_factors,
    format_factors,
    greedy_generators,
    element_order,
)
from .h1 import (
    OrbitCocycles,
    CocycleGroup,
    H1Description,
    CohomologyClass,
    cocycle_group,
    h1,
    coboundary_witness,
)

__all__ = [
    "Cocycle",
    "is_cocycle",
    "require_cocycle",
    "coboundary",
    "enumerate_characters",
    "abelianization_factors",
    "canonical_factors",
    "format_factors",
    "greedy_generators",
    "element_order",
    "OrbitCocycles",
    "CocycleGroup",
    "H1Description",
    "CohomologyClass",
    "cocycle_group",
    "h1",
    "coboundary_witness",
]
