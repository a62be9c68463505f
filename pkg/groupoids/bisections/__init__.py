"""The bisection inverse semigroup and the topological full group F(G)."""

from .bisection import (
    Bisection,
    FullBisection,
    UnitPermutation,
    unit_bisection,
    empty_bisection,
    multiply,
    inverse,
    leq,
    conjugate,
    rho,
    compose_permutations,
    invert_permutation,
    maximal_bisection_through,
    all_bisections,
)
from .full_group import FullGroup, full_group, rho_image, rho_kernel

__all__ = [
    "Bisection",
    "FullBisection",
    "UnitPermutation",
    "unit_bisection",
    "empty_bisection",
    "multiply",
    "inverse",
    "leq",
    "conjugate",
    "rho",
    "compose_permutations",
    "invert_permutation",
    "maximal_bisection_through",
    "all_bisections",
    "FullGroup",
    "full_group",
    "rho_image",
    "rho_kernel",
]
