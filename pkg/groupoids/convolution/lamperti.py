"""Lamperti (spatial) elements f * 1_B and the support homomorphism sigma.

Invertible isometries of the groupoid algebras are exactly the elements f * 1_B
with B a full bisection and f circle valued; their group is
C(G^(0), T) x| F(G) with F(G) acting by g -> g o rho_A^-1.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from ..bisections.bisection import (
    Bisection,
    FullBisection,
    invert_permutation,
    multiply,
    rho,
    unit_bisection,
)
from ..common.errors import (
    MismatchedGroupoidError,
    NotABisectionError,
    NotCircleValuedError,
    NotFullBisectionError,
    PartialFunctionError,
)
from ..common.settings import get_settings
from ..core.groupoid import FiniteGroupoid
from .algebra import AlgebraElement
from .circle import CircleFunction, CircleScalar
from .scalars import CyclotomicNumber, Scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LampertiElement:
    """The pair (f, B) standing for f * 1_B, with f defined on rng(B)."""

    f: CircleFunction
    bisection: Bisection

    def __post_init__(self) -> None:
        missing = tuple(sorted(self.bisection.rng_set - self.f.domain))
        if missing:
            raise PartialFunctionError(
                f"phase undefined on range units {list(missing)}", missing=missing
            )
        if self.f.domain != self.bisection.rng_set:
            object.__setattr__(self, "f", self.f.restrict(self.bisection.rng_set))

    @classmethod
    def of(cls, f: CircleFunction, bisection: Bisection) -> "LampertiElement":
        return cls(f, bisection)

    @classmethod
    def plain(cls, bisection: Bisection) -> "LampertiElement":
        """(1, B), the section image of B."""
        return cls(CircleFunction.constant(bisection.rng_set), bisection)

    @classmethod
    def identity(cls, g: FiniteGroupoid) -> "LampertiElement":
        return cls.plain(unit_bisection(g))

    @property
    def groupoid(self) -> FiniteGroupoid:
        return self.bisection.groupoid

    @property
    def is_full(self) -> bool:
        return self.bisection.is_full

    def __iter__(self) -> Iterator[object]:
        return iter((self.f, self.bisection))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LampertiElement):
            return NotImplemented
        return self.bisection == other.bisection and self.f == other.f

    def __hash__(self) -> int:
        return hash((self.f, self.bisection))

    def __repr__(self) -> str:
        return f"LampertiElement({self.f!r}, {list(self.bisection.arrows)})"

    def as_element(self) -> AlgebraElement:
        """(f * 1_B)(x) = f(r(x)) for x in B."""
        g = self.groupoid
        return AlgebraElement(g, {x: self.f[g.rng[x]].to_exact() for x in self.bisection.arrows})

    def inverse(self) -> "LampertiElement":
        """(conj(f) o rho_B, B^-1); partial rho in the semigroup case."""
        g = self.groupoid
        inverse_bisection = Bisection.of(g, (g.inv[x] for x in self.bisection.arrows))
        return LampertiElement(self.f.conjugate().precompose(self.bisection.partial_rho()), inverse_bisection)


def compose_lamperti(u: LampertiElement, v: LampertiElement) -> LampertiElement:
    """(f, A)(g, B) = (f . (g o rho_A^-1) on rng(AB), AB)."""
    if u.groupoid is not v.groupoid and u.groupoid != v.groupoid:
        raise MismatchedGroupoidError("Lamperti elements live over different groupoids")
    g = u.groupoid
    product = multiply(u.bisection, v.bisection)
    by_range = u.bisection.by_range
    phases = {}
    for w in product.rng_set:
        a = by_range[w]
        phases[w] = u.f[w] * v.f[g.src[a]]
    return LampertiElement(CircleFunction(phases), product)


def semidirect_multiply(u: LampertiElement, v: LampertiElement) -> LampertiElement:
    """Product in C(G^(0), T) x| F(G), computed from rho alone."""
    rho_a_inverse = invert_permutation(rho(u.bisection))
    g = u.groupoid
    twisted = v.f.precompose(rho_a_inverse)
    phases = {w: u.f[w] * twisted[w] for w in g.units}
    return LampertiElement(CircleFunction(phases), multiply(u.bisection, v.bisection).as_full())


def circle_angle(value: Scalar) -> Optional[Fraction]:
    """The angle of a circle-valued scalar, or None when |value| != 1.

    Floating values are snapped to the nearest rational angle with bounded
    denominator and accepted within the isometry tolerance.
    """
    if isinstance(value, CyclotomicNumber):
        return value.root_of_unity_angle()
    settings = get_settings()
    if abs(abs(value) - 1.0) > settings.isometry_tol:
        return None
    turns = (float(np.angle(value)) / (2 * math.pi)) % 1.0
    angle = Fraction(turns).limit_denominator(settings.max_denominator) % 1
    if abs(complex(CircleScalar(angle)) - value) > settings.isometry_tol:
        return None
    return angle


def decompose_partial_isometry(a: AlgebraElement) -> LampertiElement:
    """(f, supp a) for elements circle valued on a bisection support."""
    g = a.groupoid
    arrows = a.support()
    try:
        bisection = Bisection.of(g, arrows)
    except NotABisectionError as exc:
        raise NotFullBisectionError(f"support {list(arrows)} is not a bisection", arrows=arrows) from exc
    phases = {}
    for x in arrows:
        angle = circle_angle(a[x])
        if angle is None:
            raise NotCircleValuedError(f"coefficient at arrow {x} is off the unit circle", arrow=x, value=a[x])
        phases[g.rng[x]] = CircleScalar(angle)
    return LampertiElement(CircleFunction(phases), bisection)


def decompose_isometry(a: AlgebraElement) -> LampertiElement:
    """The unique (f, B) with a = f * 1_B, B full and f circle valued."""
    arrows = a.support()
    element = decompose_partial_isometry(a)
    if not element.is_full:
        raise NotFullBisectionError(f"support {list(arrows)} is not a full bisection", arrows=arrows)
    return LampertiElement(element.f, element.bisection.as_full())


def sigma(u: LampertiElement) -> Bisection:
    """The support homomorphism."""
    return u.bisection


def pi0_class(u: LampertiElement) -> FullBisection:
    """Connected component of u among invertible isometries, labelled by its support."""
    return u.bisection.as_full()
