"""Bisections of a finite groupoid and their inverse-semigroup operations.

A bisection is a set of arrows on which both src and rng are injective. Every
subset is compact open in the discrete topology, so these are exactly the
compact open bisections. The empty bisection is the semigroup zero.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, Tuple

from ..common.errors import (
    MismatchedGroupoidError,
    NotABisectionError,
    NotFullBisectionError,
    UnknownIdError,
)
from ..core.groupoid import FiniteGroupoid

logger = logging.getLogger(__name__)

# unit -> unit, total on the unit space
UnitPermutation = Dict[int, int]


@dataclass(frozen=True, eq=False)
class Bisection:
    """Sorted arrow tuple over a fixed groupoid; equality is set equality."""

    groupoid: FiniteGroupoid
    arrows: Tuple[int, ...]

    @classmethod
    def of(cls, g: FiniteGroupoid, arrows: Iterable[int]) -> "Bisection":
        members = tuple(sorted(set(int(a) for a in arrows)))
        for a in members:
            if not 0 <= a < g.num_arrows:
                raise UnknownIdError(f"arrow {a} does not exist", ident=a)
        sources = [g.src[a] for a in members]
        ranges = [g.rng[a] for a in members]
        if len(set(sources)) != len(sources) or len(set(ranges)) != len(ranges):
            raise NotABisectionError(
                f"arrows {list(members)} repeat a source or a range", arrows=members
            )
        if cls is FullBisection or (len(members) == len(g.units) and cls is Bisection):
            if set(sources) == g.unit_set and set(ranges) == g.unit_set:
                return FullBisection(g, members)
            if cls is FullBisection:
                raise NotFullBisectionError(
                    f"bisection {list(members)} does not cover every unit", arrows=members
                )
        return Bisection(g, members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bisection):
            return NotImplemented
        return self.arrows == other.arrows and self.groupoid == other.groupoid

    def __hash__(self) -> int:
        return hash(self.arrows)

    def __lt__(self, other: "Bisection") -> bool:
        return self.arrows < other.arrows

    def __iter__(self) -> Iterator[int]:
        return iter(self.arrows)

    def __len__(self) -> int:
        return len(self.arrows)

    def __contains__(self, arrow: object) -> bool:
        return arrow in self.arrow_set

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.arrows)})"

    @cached_property
    def arrow_set(self) -> frozenset:
        return frozenset(self.arrows)

    @cached_property
    def src_set(self) -> frozenset:
        return frozenset(self.groupoid.src[a] for a in self.arrows)

    @cached_property
    def rng_set(self) -> frozenset:
        return frozenset(self.groupoid.rng[a] for a in self.arrows)

    @cached_property
    def by_source(self) -> Dict[int, int]:
        """unit -> the arrow of this bisection with that source."""
        return {self.groupoid.src[a]: a for a in self.arrows}

    @cached_property
    def by_range(self) -> Dict[int, int]:
        """unit -> the arrow of this bisection with that range."""
        return {self.groupoid.rng[a]: a for a in self.arrows}

    @property
    def is_full(self) -> bool:
        units = self.groupoid.unit_set
        return self.src_set == units and self.rng_set == units

    def as_full(self) -> "FullBisection":
        if isinstance(self, FullBisection):
            return self
        if not self.is_full:
            raise NotFullBisectionError(
                f"bisection {list(self.arrows)} is not full", arrows=self.arrows
            )
        return FullBisection(self.groupoid, self.arrows)

    def partial_rho(self) -> Dict[int, int]:
        """src(a) -> rng(a) for every arrow a in the bisection."""
        g = self.groupoid
        return {g.src[a]: g.rng[a] for a in self.arrows}


class FullBisection(Bisection):
    """A bisection whose source and range sets are the whole unit space."""


def unit_bisection(g: FiniteGroupoid) -> FullBisection:
    return FullBisection(g, tuple(g.units))


def empty_bisection(g: FiniteGroupoid) -> Bisection:
    return Bisection(g, ())


def _check_same(a: Bisection, b: Bisection) -> None:
    if a.groupoid is not b.groupoid and a.groupoid != b.groupoid:
        raise MismatchedGroupoidError("bisections live over different groupoids")


def multiply(a: Bisection, b: Bisection) -> Bisection:
    """AB = {comp(x, y) : x in A, y in B, src(x) = rng(y)}."""
    _check_same(a, b)
    g = a.groupoid
    left = a.by_source
    product = []
    for y in b.arrows:
        x = left.get(g.rng[y])
        if x is not None:
            product.append(g.comp_table[(x, y)])
    return Bisection.of(g, product)


def inverse(a: Bisection) -> Bisection:
    g = a.groupoid
    return Bisection.of(g, (g.inv[x] for x in a.arrows))


def leq(a: Bisection, b: Bisection) -> bool:
    """The inverse-semigroup order: A <= B iff A = B A^-1 A."""
    _check_same(a, b)
    return a == multiply(b, multiply(inverse(a), a))


def conjugate(a: Bisection, b: Bisection) -> Bisection:
    """B^-1 A B."""
    return multiply(inverse(b), multiply(a, b))


def rho(b: Bisection) -> UnitPermutation:
    """rho_B(u) = r(Bu): the unit permutation of a full bisection."""
    if not b.is_full:
        raise NotFullBisectionError(f"rho needs a full bisection, got {list(b.arrows)}", arrows=b.arrows)
    return b.partial_rho()


def compose_permutations(first: UnitPermutation, second: UnitPermutation) -> UnitPermutation:
    """first o second (apply `second` first)."""
    return {u: first[second[u]] for u in second}


def invert_permutation(perm: UnitPermutation) -> UnitPermutation:
    return {v: u for u, v in perm.items()}


def maximal_bisection_through(g: FiniteGroupoid, arrow: int) -> Bisection:
    """Greedy maximal bisection containing `arrow`, adding arrows by increasing id."""
    used_src = {g.src[arrow]}
    used_rng = {g.rng[arrow]}
    members = [arrow]
    for x in g.arrows:
        if g.src[x] in used_src or g.rng[x] in used_rng:
            continue
        members.append(x)
        used_src.add(g.src[x])
        used_rng.add(g.rng[x])
    return Bisection.of(g, members)


def all_bisections(g: FiniteGroupoid) -> Iterator[Bisection]:
    """Every bisection, the empty one first; exponential, for small groupoids."""

    def extend(start: int, chosen: Tuple[int, ...], used_src: frozenset, used_rng: frozenset):
        yield chosen
        for x in range(start, g.num_arrows):
            if g.src[x] in used_src or g.rng[x] in used_rng:
                continue
            yield from extend(x + 1, chosen + (x,), used_src | {g.src[x]}, used_rng | {g.rng[x]})

    for members in extend(0, (), frozenset(), frozenset()):
        yield Bisection.of(g, members)
