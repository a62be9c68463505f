"""Orbits, effectiveness and isotropy of a finite groupoid."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .groupoid import FiniteGroupoid

logger = logging.getLogger(__name__)


def orbits(g: FiniteGroupoid) -> List[Tuple[int, ...]]:
    """Partition of the units into orbits, each sorted, ordered by least unit."""
    graph = nx.Graph()
    graph.add_nodes_from(g.units)
    graph.add_edges_from((g.src[x], g.rng[x]) for x in g.arrows if g.src[x] != g.rng[x])
    blocks = [tuple(sorted(component)) for component in nx.connected_components(graph)]
    return sorted(blocks)


def isotropy_arrows(g: FiniteGroupoid, unit: int) -> Tuple[int, ...]:
    return g.hom(unit, unit)


def non_unit_isotropy(g: FiniteGroupoid) -> Optional[int]:
    """The least non-unit arrow fixing a unit, or None when there is none."""
    for x in g.arrows:
        if g.src[x] == g.rng[x] and not g.is_unit(x):
            return x
    return None


def is_effective(g: FiniteGroupoid) -> bool:
    """True iff the isotropy is trivial (effective and principal coincide here)."""
    return non_unit_isotropy(g) is None


@dataclass
class OrbitIsotropy:
    """Isotropy group at the base unit of one orbit, with its composition table."""

    base: int
    units: Tuple[int, ...]
    elements: Tuple[int, ...]
    table: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass
class IsotropySummary:
    per_unit: Dict[int, Tuple[int, ...]]
    per_orbit: List[OrbitIsotropy]


def isotropy_summary(g: FiniteGroupoid) -> IsotropySummary:
    per_unit = {u: isotropy_arrows(g, u) for u in g.units}
    per_orbit = []
    for block in orbits(g):
        base = block[0]
        elements = per_unit[base]
        table = {(a, b): g.comp_table[(a, b)] for a in elements for b in elements}
        per_orbit.append(OrbitIsotropy(base=base, units=block, elements=elements, table=table))
    logger.debug(f"Isotropy orders per orbit: {[iso.order for iso in per_orbit]}")
    return IsotropySummary(per_unit=per_unit, per_orbit=per_orbit)
