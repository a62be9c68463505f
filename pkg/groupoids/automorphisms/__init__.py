"""Aut(G), algebra automorphisms of C_c(G) and the maps between them.

gamma embeds cocycles, lift is the section theta -> alpha_theta, inner gives
conjugation by invertible isometries, and upsilon / phi / omega recover the
groupoid automorphism underlying an algebra automorphism.
"""

from .groupoid_aut import (
    GroupoidAut,
    automorphism_failure,
    structure_graph,
    aut_group,
    are_isomorphic,
    ad_bisection,
    ad_bisection_left,
)
from .linear_maps import AlgebraLinearMap, gamma, lift, inner
from .outer import (
    OuterQuotient,
    require_effective,
    inner_automorphisms,
    outer_class,
    outer_quotient,
    outer_order,
)
from .omega import (
    AlgebraAutParam,
    upsilon,
    phi,
    omega,
    omega_image,
    validate_structure,
    decompose_aut,
)

__all__ = [
    "GroupoidAut",
    "automorphism_failure",
    "structure_graph",
    "aut_group",
    "are_isomorphic",
    "ad_bisection",
    "ad_bisection_left",
    "AlgebraLinearMap",
    "gamma",
    "lift",
    "inner",
    "AlgebraAutParam",
    "upsilon",
    "phi",
    "omega",
    "omega_image",
    "validate_structure",
    "decompose_aut",
    "OuterQuotient",
    "require_effective",
    "inner_automorphisms",
    "outer_class",
    "outer_quotient",
    "outer_order",
]
