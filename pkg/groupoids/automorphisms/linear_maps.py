"""Linear maps on C_c(G) and the generator families gamma, lift and inner.

A map is stored by its columns: the images of the point masses delta_z.
"""

import logging
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from ..common.errors import MismatchedGroupoidError, NotFullBisectionError, UnknownIdError
from ..cohomology.cocycles import Cocycle, require_cocycle
from ..convolution.algebra import AlgebraElement, convolve, delta, unit_element
from ..convolution.lamperti import LampertiElement
from ..convolution.scalars import ZERO
from ..core.groupoid import FiniteGroupoid
from .groupoid_aut import GroupoidAut

logger = logging.getLogger(__name__)


class AlgebraLinearMap:
    """Linear endomorphism of C_c(G) given by the images of the point masses."""

    __hash__ = None  # type: ignore[assignment]

    def __init__(self, groupoid: FiniteGroupoid, columns: Mapping[int, AlgebraElement]):
        self.groupoid = groupoid
        self.columns: Dict[int, AlgebraElement] = {}
        for z in groupoid.arrows:
            column = columns.get(z)
            if column is None:
                raise UnknownIdError(f"no image given for arrow {z}", ident=z)
            if column.groupoid != groupoid:
                raise MismatchedGroupoidError(f"image of arrow {z} lives over another groupoid")
            self.columns[z] = column

    @classmethod
    def identity(cls, g: FiniteGroupoid) -> "AlgebraLinearMap":
        return cls(g, {z: delta(g, z) for z in g.arrows})

    @classmethod
    def from_matrix(cls, g: FiniteGroupoid, matrix: np.ndarray) -> "AlgebraLinearMap":
        """matrix[x, z] is the coefficient of delta_x in the image of delta_z."""
        columns = {}
        for z in g.arrows:
            columns[z] = AlgebraElement(g, {x: matrix[x, z] for x in g.arrows if _nonzero(matrix[x, z])})
        return cls(g, columns)

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        result = AlgebraElement(self.groupoid)
        for z, value in a.items():
            result = result + self.columns[z].scale(value)
        return result

    def __mul__(self, other: "AlgebraLinearMap") -> "AlgebraLinearMap":
        """self o other."""
        return AlgebraLinearMap(self.groupoid, {z: self(other.columns[z]) for z in self.groupoid.arrows})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraLinearMap):
            return NotImplemented
        return self.first_difference(other) is None

    def first_difference(self, other: "AlgebraLinearMap") -> Optional[int]:
        """Least arrow z whose images differ, else None."""
        for z in self.groupoid.arrows:
            if self.columns[z] != other.columns[z]:
                return z
        return None

    def matrix(self) -> np.ndarray:
        m = self.groupoid.num_arrows
        dense = np.empty((m, m), dtype=object)
        dense.fill(ZERO)
        for z, column in self.columns.items():
            for x, value in column.items():
                dense[x, z] = value
        return dense

    def multiplicativity_failure(self) -> Optional[Tuple[int, int]]:
        """First basis pair (a, b) with alpha(delta_a * delta_b) != alpha(delta_a) * alpha(delta_b)."""
        g = self.groupoid
        for a in g.arrows:
            for b in g.arrows:
                product = g.comp(a, b)
                expected = self.columns[product] if product is not None else AlgebraElement(g)
                if convolve(self.columns[a], self.columns[b]) != expected:
                    return a, b
        return None

    def is_unital(self) -> bool:
        g = self.groupoid
        return self(unit_element(g)) == unit_element(g)

    def diagonal_failure(self) -> Optional[int]:
        """First unit whose image leaves the diagonal subalgebra."""
        g = self.groupoid
        for u in g.units:
            if any(not g.is_unit(x) for x in self.columns[u].support()):
                return u
        return None


def _nonzero(value: object) -> bool:
    if isinstance(value, complex):
        return value != 0
    return bool(value)


def gamma(xi: Cocycle) -> AlgebraLinearMap:
    """Gamma(xi)(f)(x) = xi(x) f(x)."""
    require_cocycle(xi)
    g = xi.groupoid
    return AlgebraLinearMap(g, {z: AlgebraElement(g, {z: xi[z].to_exact()}) for z in g.arrows})


def lift(theta: GroupoidAut) -> AlgebraLinearMap:
    """The section alpha_theta(f) = f o theta^-1, i.e. delta_z -> delta_theta(z)."""
    g = theta.groupoid
    return AlgebraLinearMap(g, {z: delta(g, theta(z)) for z in g.arrows})


def inner(u: LampertiElement) -> AlgebraLinearMap:
    """ad(u)(a) = u^-1 * a * u for a full Lamperti element u."""
    if not u.is_full:
        raise NotFullBisectionError(
            f"inner automorphisms need a full bisection, got {list(u.bisection.arrows)}",
            arrows=u.bisection.arrows,
        )
    g = u.groupoid
    v, v_inverse = u.as_element(), u.inverse().as_element()
    return AlgebraLinearMap(g, {z: convolve(convolve(v_inverse, delta(g, z)), v) for z in g.arrows})
