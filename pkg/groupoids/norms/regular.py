"""The left regular representation and the I-norm.

lambda(a) acts on functions over all arrows by left convolution:
lambda(a)[x, z] = a(x z^-1) when src(x) = src(z), else 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

import numpy as np

from ..convolution.algebra import AlgebraElement
from ..convolution.scalars import ZERO, CyclotomicNumber, scalar_abs
from ..core.groupoid import FiniteGroupoid

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class RegularRepMatrix:
    """Square matrix indexed by arrows; entries are exact or complex scalars."""

    groupoid: FiniteGroupoid
    entries: np.ndarray

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def to_complex(self) -> np.ndarray:
        return np.array(
            [[complex(v) for v in row] for row in self.entries], dtype=complex
        ).reshape(self.entries.shape)

    def abs_matrix(self) -> np.ndarray:
        """Entrywise moduli, exact before the conversion to float where possible."""
        return np.array(
            [[float(scalar_abs(v)) for v in row] for row in self.entries], dtype=float
        ).reshape(self.entries.shape)

    def __matmul__(self, other: "RegularRepMatrix") -> "RegularRepMatrix":
        return RegularRepMatrix(self.groupoid, np.dot(self.entries, other.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RegularRepMatrix):
            return NotImplemented
        if self.entries.shape != other.entries.shape:
            return False
        return all(
            (a - b) == 0 if isinstance(a - b, CyclotomicNumber) else abs(a - b) <= 1e-12
            for a, b in zip(self.entries.flat, other.entries.flat)
        )

    def is_identity(self) -> bool:
        n = self.size
        identity = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                identity[i, j] = CyclotomicNumber.rational(1 if i == j else 0)
        return self == RegularRepMatrix(self.groupoid, identity)


def regular_rep(a: AlgebraElement) -> RegularRepMatrix:
    g = a.groupoid
    n = g.num_arrows
    entries = np.empty((n, n), dtype=object)
    entries.fill(ZERO)
    for x in g.arrows:
        for z in g.arrows_from[g.src[x]]:
            y = g.comp_table[(x, g.inv[z])]
            value = a[y]
            if isinstance(value, complex) or not value.is_zero():
                entries[x, z] = value
    return RegularRepMatrix(g, entries)


def _fiber_sums(a: AlgebraElement, fibers) -> List[Union[Fraction, float]]:
    sums = []
    for arrows in fibers.values():
        total: Union[Fraction, float] = Fraction(0)
        for x in arrows:
            total = total + scalar_abs(a[x])
        sums.append(total)
    return sums


def i_norm(a: AlgebraElement) -> Union[Fraction, float]:
    """max over units of the range-fiber and source-fiber absolute sums."""
    g = a.groupoid
    sums = _fiber_sums(a, g.arrows_to) + _fiber_sums(a, g.arrows_from)
    best = max(sums)
    if all(isinstance(s, Fraction) for s in sums):
        return best
    return float(best)
