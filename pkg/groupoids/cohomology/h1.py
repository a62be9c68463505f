"""Coordinates on Z^1(G, Q/Z) and the group H^1(G, T).

Per orbit, with base unit b (the least unit) and tree arrows t_v: b -> v
(least id), every cocycle is determined by

    tau_v = xi(t_v)              for v != b      (free part, rank |orbit| - 1)
    chi(h) = xi(h)               for h in Iso(b)  (an isotropy character)

and conversely xi(x) = tau_{r(x)} - tau_{s(x)} + chi(t_{r(x)}^-1 x t_{s(x)}) in
angles. A cocycle is a coboundary iff every orbit character is trivial.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..convolution.circle import CircleFunction, CircleScalar
from ..core.groupoid import FiniteGroupoid
from ..core.structure import isotropy_summary
from .characters import (
    Character,
    abelianization_factors,
    canonical_factors,
    enumerate_characters,
    format_factors,
    greedy_generators,
)
from .cocycles import Cocycle, require_cocycle

logger = logging.getLogger(__name__)


@dataclass
class OrbitCocycles:
    """Coordinates of the cocycles restricted to one orbit."""

    base: int
    units: Tuple[int, ...]
    tree: Dict[int, int]
    isotropy: Tuple[int, ...]
    table: Dict[Tuple[int, int], int] = field(repr=False)
    generators: List[int] = field(default_factory=list)
    characters: List[Character] = field(default_factory=list, repr=False)
    invariant_factors: List[int] = field(default_factory=list)

    @property
    def tree_rank(self) -> int:
        return len(self.units) - 1

    def holonomy(self, g: FiniteGroupoid, x: int) -> int:
        """t_{r(x)}^-1 x t_{s(x)}, an element of the base isotropy."""
        return g.compose(g.inv[self.tree[g.rng[x]]], x, self.tree[g.src[x]])


@dataclass
class CocycleGroup:
    """Z^1(G, Q/Z) as a product over orbits of (Q/Z)^{tree rank} x Hom(Iso, Q/Z)."""

    groupoid: FiniteGroupoid
    orbits: List[OrbitCocycles]

    @property
    def torus_rank(self) -> int:
        return sum(orbit.tree_rank for orbit in self.orbits)

    def orbit_of(self, unit: int) -> OrbitCocycles:
        for orbit in self.orbits:
            if unit in orbit.units:
                return orbit
        raise KeyError(unit)

    def coordinates(self, xi: Cocycle) -> List[Tuple[Dict[int, Fraction], Character]]:
        """Per orbit: (tau over non-base units, character over base isotropy)."""
        result = []
        for orbit in self.orbits:
            tau = {v: xi[t].angle for v, t in orbit.tree.items() if v != orbit.base}
            chi = {h: xi[h].angle for h in orbit.isotropy}
            result.append((tau, chi))
        return result

    def from_coordinates(self, coordinates: List[Tuple[Dict[int, Fraction], Character]]) -> Cocycle:
        g = self.groupoid
        values: Dict[int, CircleScalar] = {}
        for orbit, (tau, chi) in zip(self.orbits, coordinates):
            angle = {v: Fraction(tau.get(v, 0)) for v in orbit.units}
            angle[orbit.base] = Fraction(0)
            for u in orbit.units:
                for x in g.arrows_from[u]:
                    h = orbit.holonomy(g, x)
                    values[x] = CircleScalar(angle[g.rng[x]] - angle[g.src[x]] + chi.get(h, Fraction(0)))
        return Cocycle(g, values)

    def generators(self) -> List[Cocycle]:
        """Tree generators with angle 1/2 plus the generator characters of each orbit."""
        trivial = [({}, {}) for _ in self.orbits]
        result = []
        for i, orbit in enumerate(self.orbits):
            for v in sorted(orbit.tree):
                if v == orbit.base:
                    continue
                coords = list(trivial)
                coords[i] = ({v: Fraction(1, 2)}, {})
                result.append(self.from_coordinates(coords))
            for chi in orbit.characters:
                if any(chi.values()):
                    coords = list(trivial)
                    coords[i] = ({}, chi)
                    result.append(self.from_coordinates(coords))
        return result


def cocycle_group(g: FiniteGroupoid) -> CocycleGroup:
    summary = isotropy_summary(g)
    orbits = []
    for iso in summary.per_orbit:
        tree = {v: iso.base if v == iso.base else g.hom(iso.base, v)[0] for v in iso.units}
        orbits.append(
            OrbitCocycles(
                base=iso.base,
                units=iso.units,
                tree=tree,
                isotropy=iso.elements,
                table=iso.table,
                generators=greedy_generators(iso.elements, iso.base, iso.table),
                characters=enumerate_characters(iso.elements, iso.base, iso.table),
                invariant_factors=abelianization_factors(iso.elements, iso.table),
            )
        )
    group = CocycleGroup(groupoid=g, orbits=orbits)
    logger.info(f"Cocycle coordinates for {g.describe()}: torus rank {group.torus_rank}")
    return group


@dataclass
class H1Description:
    """H^1(G, T) as a finite abelian group, plus the cocycle coordinates behind it."""

    invariant_factors: List[int]
    cocycles: CocycleGroup

    @property
    def order(self) -> int:
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    @property
    def torus_rank(self) -> int:
        return self.cocycles.torus_rank

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self) -> str:
        return format_factors(self.invariant_factors)

    def is_coboundary(self, xi: Cocycle) -> Tuple[bool, Optional[CircleFunction]]:
        """(True, f) with coboundary(f) = xi and f(base) = 0 per orbit, else (False, None)."""
        require_cocycle(xi)
        witness: Dict[int, CircleScalar] = {}
        for orbit, (tau, chi) in zip(self.cocycles.orbits, self.cocycles.coordinates(xi)):
            if any(chi.values()):
                return False, None
            witness[orbit.base] = CircleScalar()
            for v, angle in tau.items():
                witness[v] = CircleScalar(-angle)
        return True, CircleFunction(witness)

    def class_of(self, xi: Cocycle) -> "CohomologyClass":
        require_cocycle(xi)
        characters = [chi for _, chi in self.cocycles.coordinates(xi)]
        return CohomologyClass(representative=xi, characters=characters, description=self)


@dataclass(eq=False)
class CohomologyClass:
    """The class of a cocycle, identified by its per-orbit isotropy characters."""

    representative: Cocycle
    characters: List[Character]
    description: H1Description = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.characters == other.characters

    @property
    def is_trivial(self) -> bool:
        return all(not any(chi.values()) for chi in self.characters)


def h1(g: FiniteGroupoid) -> H1Description:
    group = cocycle_group(g)
    factors: List[int] = []
    for orbit in group.orbits:
        factors.extend(orbit.invariant_factors)
    description = H1Description(invariant_factors=canonical_factors(factors), cocycles=group)
    logger.info(f"H1 of {g.describe()} = {description}")
    return description


def coboundary_witness(g: FiniteGroupoid, xi: Cocycle) -> Optional[CircleFunction]:
    """f with coboundary(f) = xi, or None when xi is not a coboundary."""
    ok, witness = h1(g).is_coboundary(xi)
    return witness if ok else None
