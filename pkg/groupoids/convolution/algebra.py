"""The convolution algebra C_c(G) of a finite groupoid.

Elements are finitely supported functions on arrows with exact cyclotomic
or floating complex values:

    (a * b)(x) = sum over comp(y, z) = x of a(y) b(z)
"""

import logging
from typing import Dict, Iterator, Mapping, Optional, Tuple

import numpy as np

from ..bisections.bisection import Bisection, unit_bisection
from ..common.errors import MismatchedGroupoidError, UnknownIdError
from ..common.settings import get_settings
from ..core.groupoid import FiniteGroupoid
from .circle import CircleFunction
from .scalars import ONE, ZERO, CyclotomicNumber, Scalar, is_exact, scalar_is_zero, to_scalar

logger = logging.getLogger(__name__)


class AlgebraElement:
    """A function arrows -> scalars; entries that are exactly zero are dropped."""

    __hash__ = None  # type: ignore[assignment]

    def __init__(self, groupoid: FiniteGroupoid, values: Optional[Mapping[int, object]] = None):
        self.groupoid = groupoid
        self._values: Dict[int, Scalar] = {}
        for arrow, value in (values or {}).items():
            arrow = int(arrow)
            if not 0 <= arrow < groupoid.num_arrows:
                raise UnknownIdError(f"arrow {arrow} does not exist", ident=arrow)
            scalar = to_scalar(value)
            if isinstance(scalar, CyclotomicNumber) and scalar.is_zero():
                continue
            self._values[arrow] = scalar

    def __getitem__(self, arrow: int) -> Scalar:
        return self._values.get(arrow, ZERO)

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(sorted(self._values.items()))

    @property
    def arrows(self) -> Tuple[int, ...]:
        return tuple(sorted(self._values))

    @property
    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self._values.values())

    def support(self, tolerance: Optional[float] = None) -> Tuple[int, ...]:
        tol = get_settings().support_tolerance if tolerance is None else tolerance
        return tuple(x for x, v in sorted(self._values.items()) if not scalar_is_zero(v, tol))

    def _check_same(self, other: "AlgebraElement") -> None:
        if self.groupoid is not other.groupoid and self.groupoid != other.groupoid:
            raise MismatchedGroupoidError("elements live over different groupoids")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_same(other)
        values = dict(self._values)
        for x, v in other._values.items():
            values[x] = values[x] + v if x in values else v
        return AlgebraElement(self.groupoid, values)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.groupoid, {x: -v for x, v in self._values.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, factor: object) -> "AlgebraElement":
        c = to_scalar(factor)
        return AlgebraElement(self.groupoid, {x: c * v for x, v in self._values.items()})

    def __mul__(self, other: object) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return convolve(self, other)
        return self.scale(other)

    def __rmul__(self, other: object) -> "AlgebraElement":
        return self.scale(other)

    def adjoint(self) -> "AlgebraElement":
        """a*(x) = conj(a(x^-1))."""
        g = self.groupoid
        return AlgebraElement(g, {g.inv[x]: v.conjugate() for x, v in self._values.items()})

    def is_zero(self, tolerance: Optional[float] = None) -> bool:
        return not self.support(tolerance)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.groupoid != other.groupoid:
            return False
        return (self - other).is_zero()

    def to_vector(self) -> np.ndarray:
        vector = np.zeros(self.groupoid.num_arrows, dtype=complex)
        for x, v in self._values.items():
            vector[x] = complex(v)
        return vector

    def __repr__(self) -> str:
        body = ", ".join(f"{x}: {v!r}" for x, v in self.items())
        return f"AlgebraElement({{{body}}})"


def zero(g: FiniteGroupoid) -> AlgebraElement:
    return AlgebraElement(g)


def delta(g: FiniteGroupoid, arrow: int) -> AlgebraElement:
    return AlgebraElement(g, {arrow: ONE})


def indicator(b: Bisection) -> AlgebraElement:
    """1_B: value 1 on B and 0 elsewhere."""
    return AlgebraElement(b.groupoid, {x: ONE for x in b.arrows})


def unit_element(g: FiniteGroupoid) -> AlgebraElement:
    """1_{G^(0)}, the multiplicative unit."""
    return indicator(unit_bisection(g))


def diagonal(g: FiniteGroupoid, f: CircleFunction) -> AlgebraElement:
    """The element supported on units with value f(u) at u."""
    return AlgebraElement(g, {u: f[u].to_exact() for u in f.domain})


def support(a: AlgebraElement, tolerance: Optional[float] = None) -> Tuple[int, ...]:
    return a.support(tolerance)


def convolve(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check_same(b)
    g = a.groupoid
    by_range: Dict[int, list] = {}
    for z, bz in b._values.items():
        by_range.setdefault(g.rng[z], []).append((z, bz))
    result: Dict[int, Scalar] = {}
    for y, ay in a._values.items():
        for z, bz in by_range.get(g.src[y], ()):
            x = g.comp_table[(y, z)]
            term = ay * bz
            result[x] = result[x] + term if x in result else term
    return AlgebraElement(g, result)
