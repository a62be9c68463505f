"""Aut(G) modulo conjugation by full bisections.

On an effective groupoid B -> ad(B) embeds F(G) into Aut(G); the outer
automorphism group of C_c(G) then has order |H^1| * |Aut(G) / ad(F(G))|.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from ..bisections.full_group import FullGroup, full_group
from ..cohomology.h1 import h1
from ..common.errors import EffectivenessRequiredError
from ..core.groupoid import FiniteGroupoid
from ..core.structure import non_unit_isotropy
from .groupoid_aut import GroupoidAut, ad_bisection, aut_group

logger = logging.getLogger(__name__)


def require_effective(g: FiniteGroupoid) -> FiniteGroupoid:
    arrow = non_unit_isotropy(g)
    if arrow is not None:
        raise EffectivenessRequiredError(
            f"{g.describe()} is not effective: arrow {arrow} is non-unit isotropy", arrow=arrow
        )
    return g


def inner_automorphisms(group: FullGroup) -> List[GroupoidAut]:
    """ad(F(G)), sorted and without repeats."""
    return sorted({ad_bisection(b) for b in group})


def outer_class(theta: GroupoidAut, inner: List[GroupoidAut]) -> GroupoidAut:
    """Least representative of the coset theta o ad(F(G))."""
    return min(theta * a for a in inner)


@dataclass
class OuterQuotient:
    """Aut(G) / ad(F(G)) together with the coset map."""

    automorphisms: List[GroupoidAut]
    inner: List[GroupoidAut]
    cosets: Dict[GroupoidAut, GroupoidAut]

    @property
    def order(self) -> int:
        return len(set(self.cosets.values()))

    def coset_of(self, theta: GroupoidAut) -> GroupoidAut:
        return self.cosets[theta]


def outer_quotient(
    g: FiniteGroupoid, group: Optional[FullGroup] = None, automorphisms: Optional[List[GroupoidAut]] = None
) -> OuterQuotient:
    require_effective(g)
    group = group if group is not None else full_group(g)
    automorphisms = automorphisms if automorphisms is not None else aut_group(g)
    inner = inner_automorphisms(group)
    cosets = {theta: outer_class(theta, inner) for theta in automorphisms}
    quotient = OuterQuotient(automorphisms=automorphisms, inner=inner, cosets=cosets)
    logger.info(f"Aut/F for {g.describe()}: {len(automorphisms)} / {len(inner)} = {quotient.order}")
    return quotient


def outer_order(g: FiniteGroupoid) -> int:
    """|H^1(G, T)| * |Aut(G) / ad(F(G))| for an effective groupoid."""
    return h1(g).order * outer_quotient(g).order
