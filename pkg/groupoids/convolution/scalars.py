"""Exact complex scalars in cyclotomic fields.

A CyclotomicNumber of order N is a rational combination of the powers of
zeta_N = exp(2*pi*i/N). Every root-of-unity phase and every product of them
stays exact, including the irrational real parts that appear for
denominators 3, 8 and 12. Mixing with Python floats or complex numbers
produces a plain complex, which is how floating mode starts.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import sympy

logger = logging.getLogger(__name__)

_X = sympy.Symbol("x")

RationalLike = Union[int, Fraction]


@lru_cache(maxsize=64)
def _cyclotomic(order: int) -> sympy.Poly:
    return sympy.cyclotomic_poly(order, _X, polys=True)


def _to_fraction(value: RationalLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class CyclotomicNumber:
    """sum_k coeffs[k] * zeta_order^k, with rational coefficients."""

    __slots__ = ("order", "coeffs")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, order: int, coeffs: Sequence[RationalLike]):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        values = [Fraction(0)] * order
        for k, c in enumerate(coeffs):
            values[k % order] += _to_fraction(c)
        self.order = order
        self.coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def rational(cls, value: RationalLike) -> "CyclotomicNumber":
        return cls(1, [value])

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicNumber":
        coeffs = [0] * order
        coeffs[power % order] = 1
        return cls(order, coeffs)._compact()

    @classmethod
    def from_angle(cls, angle: Fraction) -> "CyclotomicNumber":
        """exp(2*pi*i*angle) for a rational angle."""
        angle = _to_fraction(angle) % 1
        return cls.zeta(angle.denominator, angle.numerator)

    @classmethod
    def gaussian(cls, re: RationalLike, im: RationalLike) -> "CyclotomicNumber":
        return cls(4, [re, im, 0, 0])._compact()

    def _lift(self, order: int) -> Tuple[Fraction, ...]:
        step = order // self.order
        values = [Fraction(0)] * order
        for k, c in enumerate(self.coeffs):
            values[k * step] = c
        return tuple(values)

    def _compact(self) -> "CyclotomicNumber":
        """Rewrite over the smallest order that holds the same coefficients."""
        support = [k for k, c in enumerate(self.coeffs) if c]
        if not support:
            return CyclotomicNumber(1, [0])
        step = self.order
        for k in support:
            step = math.gcd(step, k)
        if step == 1:
            return self
        reduced = CyclotomicNumber.__new__(CyclotomicNumber)
        reduced.order = self.order // step
        reduced.coeffs = self.coeffs[::step]
        return reduced

    @staticmethod
    def _coerce(other: object) -> Optional["CyclotomicNumber"]:
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CyclotomicNumber.rational(other)
        return None

    def __add__(self, other: object):
        rhs = self._coerce(other)
        if rhs is None:
            if isinstance(other, (float, complex)):
                return complex(self) + other
            return NotImplemented
        order = math.lcm(self.order, rhs.order)
        left, right = self._lift(order), rhs._lift(order)
        return CyclotomicNumber(order, [a + b for a, b in zip(left, right)])._compact()

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: object):
        rhs = self._coerce(other)
        if rhs is None:
            if isinstance(other, (float, complex)):
                return complex(self) - other
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object):
        return (-self) + other

    def __mul__(self, other: object):
        rhs = self._coerce(other)
        if rhs is None:
            if isinstance(other, (float, complex)):
                return complex(self) * other
            return NotImplemented
        if rhs.order == 1:
            factor = rhs.coeffs[0]
            return CyclotomicNumber(self.order, [c * factor for c in self.coeffs])._compact()
        order = math.lcm(self.order, rhs.order)
        left, right = self._lift(order), rhs._lift(order)
        product = [Fraction(0)] * order
        for i, a in enumerate(left):
            if not a:
                continue
            for j, b in enumerate(right):
                if b:
                    product[(i + j) % order] += a * b
        return CyclotomicNumber(order, product)._compact()

    __rmul__ = __mul__

    def __truediv__(self, other: object):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (1 / _to_fraction(other))
        if isinstance(other, (float, complex)):
            return complex(self) / other
        return NotImplemented

    def conjugate(self) -> "CyclotomicNumber":
        n = self.order
        return CyclotomicNumber(n, [self.coeffs[(-k) % n] for k in range(n)])

    def abs_squared(self) -> "CyclotomicNumber":
        return self * self.conjugate()

    def _reduced(self) -> sympy.Poly:
        coefficients = [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)]
        return sympy.Poly(coefficients, _X, domain="QQ").rem(_cyclotomic(self.order))

    def is_zero(self) -> bool:
        support = [k for k, c in enumerate(self.coeffs) if c]
        if not support:
            return True
        if len(support) == 1:
            return False
        c = self.coeffs
        if self.order == 2:
            return c[0] == c[1]
        if self.order == 4:
            return c[0] == c[2] and c[1] == c[3]
        return self._reduced().is_zero

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            if isinstance(other, (float, complex)):
                return complex(self) == complex(other)
            return NotImplemented
        return (self - rhs).is_zero()

    def __complex__(self) -> complex:
        powers = np.exp(2j * np.pi * np.arange(self.order) / self.order)
        weights = np.array([float(c) for c in self.coeffs])
        return complex(np.dot(weights, powers))

    def __abs__(self) -> float:
        exact = self.exact_abs()
        if exact is not None:
            return float(exact)
        return abs(complex(self))

    def rational_value(self) -> Optional[Fraction]:
        """The value as a Fraction when it is rational, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        if self.order in (2, 4):
            real, imag = self._gaussian_parts()
            return real if imag == 0 else None
        remainder = self._reduced()
        if remainder.is_zero:
            return Fraction(0)
        if remainder.degree() > 0:
            return None
        value = remainder.coeff_monomial(1)
        return Fraction(int(value.p), int(value.q))

    def _gaussian_parts(self) -> Tuple[Fraction, Fraction]:
        lifted = self._lift(4)
        return lifted[0] - lifted[2], lifted[1] - lifted[3]

    def exact_abs(self) -> Optional[Fraction]:
        """|z| as a Fraction when |z|^2 is the square of a rational."""
        square = self.abs_squared().rational_value()
        if square is None or square < 0:
            return None
        num, den = square.numerator, square.denominator
        root_num, root_den = math.isqrt(num), math.isqrt(den)
        if root_num * root_num == num and root_den * root_den == den:
            return Fraction(root_num, root_den)
        return None

    def root_of_unity_angle(self) -> Optional[Fraction]:
        """The angle t with z = exp(2*pi*i*t) when z is a root of unity, else None."""
        if self.abs_squared().rational_value() != 1:
            return None
        modulus = math.lcm(self.order, 2)
        turns = (np.angle(complex(self)) / (2 * np.pi)) % 1.0
        power = int(round(turns * modulus)) % modulus
        if self == CyclotomicNumber.zeta(modulus, power):
            return Fraction(power, modulus)
        return None

    def __repr__(self) -> str:
        if self.order == 1:
            return f"Cyclotomic({self.coeffs[0]})"
        terms = [f"{c}*z{self.order}^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"Cyclotomic({' + '.join(terms) or '0'})"


Scalar = Union[CyclotomicNumber, complex]

ZERO = CyclotomicNumber.rational(0)
ONE = CyclotomicNumber.rational(1)


def to_scalar(value: object) -> Scalar:
    """Normalize ints, Fractions and floats into the two scalar kinds."""
    if isinstance(value, CyclotomicNumber):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return CyclotomicNumber.rational(value)
    if isinstance(value, (float, complex, np.floating, np.complexfloating)):
        return complex(value)
    raise TypeError(f"unsupported scalar {value!r}")


def is_exact(value: Scalar) -> bool:
    return isinstance(value, CyclotomicNumber)


def scalar_is_zero(value: Scalar, tolerance: float) -> bool:
    if isinstance(value, CyclotomicNumber):
        return value.is_zero()
    return abs(value) <= tolerance


def scalar_abs(value: Scalar) -> Union[Fraction, float]:
    """Exact modulus when available, otherwise a float."""
    if isinstance(value, CyclotomicNumber):
        exact = value.exact_abs()
        return exact if exact is not None else abs(complex(value))
    return abs(value)
