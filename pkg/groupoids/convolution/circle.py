"""Exact circle values (rational angles) and circle-valued unit-space functions."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from ..common.errors import PartialFunctionError
from ..core.groupoid import FiniteGroupoid
from .scalars import CyclotomicNumber

AngleLike = Union[int, str, Fraction]


@dataclass(frozen=True, order=True)
class CircleScalar:
    """exp(2*pi*i*angle) with the angle a reduced rational in [0, 1)."""

    angle: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "angle", Fraction(self.angle) % 1)

    @classmethod
    def of(cls, value: AngleLike) -> "CircleScalar":
        return cls(Fraction(value))

    def __mul__(self, other: "CircleScalar") -> "CircleScalar":
        if not isinstance(other, CircleScalar):
            return NotImplemented
        return CircleScalar(self.angle + other.angle)

    def __pow__(self, exponent: int) -> "CircleScalar":
        return CircleScalar(self.angle * exponent)

    def conjugate(self) -> "CircleScalar":
        return CircleScalar(-self.angle)

    inverse = conjugate

    @property
    def is_one(self) -> bool:
        return self.angle == 0

    @property
    def order(self) -> int:
        """Multiplicative order, i.e. the angle's denominator."""
        return self.angle.denominator

    def to_exact(self) -> CyclotomicNumber:
        return CyclotomicNumber.from_angle(self.angle)

    def __complex__(self) -> complex:
        return complex(math.cos(2 * math.pi * self.angle), math.sin(2 * math.pi * self.angle))

    def __str__(self) -> str:
        return str(self.angle)


class CircleFunction:
    """A map from a set of units into the circle; the domain is explicit."""

    def __init__(self, values: Mapping[int, Union[CircleScalar, AngleLike]]):
        self._values: Dict[int, CircleScalar] = {
            int(u): v if isinstance(v, CircleScalar) else CircleScalar.of(v)
            for u, v in values.items()
        }

    @classmethod
    def constant(cls, units: Iterable[int], value: AngleLike = 0) -> "CircleFunction":
        scalar = CircleScalar.of(value)
        return cls({u: scalar for u in units})

    @classmethod
    def one(cls, g: FiniteGroupoid) -> "CircleFunction":
        return cls.constant(g.units)

    @property
    def domain(self) -> frozenset:
        return frozenset(self._values)

    def __getitem__(self, unit: int) -> CircleScalar:
        return self._values[unit]

    def get(self, unit: int, default: Optional[CircleScalar] = None) -> Optional[CircleScalar]:
        return self._values.get(unit, default)

    def items(self) -> Iterator[Tuple[int, CircleScalar]]:
        return iter(sorted(self._values.items()))

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CircleFunction):
            return NotImplemented
        return self._values == other._values

    def __hash__(self) -> int:
        return hash(frozenset(self._values.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{u}:{v.angle}" for u, v in self.items())
        return f"CircleFunction({{{body}}})"

    def is_total(self, g: FiniteGroupoid) -> bool:
        return self.domain == g.unit_set

    def require_total(self, g: FiniteGroupoid) -> "CircleFunction":
        missing = tuple(sorted(g.unit_set - self.domain))
        if missing:
            raise PartialFunctionError(f"function undefined at units {list(missing)}", missing=missing)
        return self

    def restrict(self, units: Iterable[int]) -> "CircleFunction":
        return CircleFunction({u: self._values[u] for u in units})

    def conjugate(self) -> "CircleFunction":
        return CircleFunction({u: v.conjugate() for u, v in self._values.items()})

    def __mul__(self, other: "CircleFunction") -> "CircleFunction":
        """Pointwise product on the common domain."""
        if not isinstance(other, CircleFunction):
            return NotImplemented
        common = self.domain & other.domain
        return CircleFunction({u: self._values[u] * other._values[u] for u in common})

    def precompose(self, perm: Mapping[int, int]) -> "CircleFunction":
        """u -> f(perm[u]) wherever perm[u] lies in the domain."""
        return CircleFunction(
            {u: self._values[v] for u, v in perm.items() if v in self._values}
        )

    def is_trivial(self) -> bool:
        return all(v.is_one for v in self._values.values())
