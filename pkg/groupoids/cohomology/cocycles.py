"""Circle-valued 1-cocycles and coboundaries."""

import logging
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

from ..common.errors import NotACocycleError, PartialFunctionError
from ..common.results import CocycleCheck
from ..convolution.circle import CircleFunction, CircleScalar
from ..core.groupoid import FiniteGroupoid

logger = logging.getLogger(__name__)


class Cocycle:
    """A map arrows -> circle; a 1-cocycle when multiplicative (see `is_cocycle`)."""

    def __init__(self, groupoid: FiniteGroupoid, values: Mapping[int, Union[CircleScalar, Fraction, int, str]]):
        self.groupoid = groupoid
        self._values: Dict[int, CircleScalar] = {
            int(x): v if isinstance(v, CircleScalar) else CircleScalar.of(v) for x, v in values.items()
        }
        missing = tuple(x for x in groupoid.arrows if x not in self._values)
        if missing:
            raise PartialFunctionError(f"cocycle undefined at arrows {list(missing)}", missing=missing)

    @classmethod
    def trivial(cls, g: FiniteGroupoid) -> "Cocycle":
        return cls(g, {x: CircleScalar() for x in g.arrows})

    def __getitem__(self, arrow: int) -> CircleScalar:
        return self._values[arrow]

    def items(self) -> Iterator[Tuple[int, CircleScalar]]:
        return iter(sorted(self._values.items()))

    def angles(self) -> Tuple[Fraction, ...]:
        return tuple(self._values[x].angle for x in self.groupoid.arrows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cocycle):
            return NotImplemented
        return self.groupoid == other.groupoid and self._values == other._values

    def __hash__(self) -> int:
        return hash(self.angles())

    def __repr__(self) -> str:
        return f"Cocycle({[str(a) for a in self.angles()]})"

    def __mul__(self, other: "Cocycle") -> "Cocycle":
        return Cocycle(self.groupoid, {x: self._values[x] * other._values[x] for x in self.groupoid.arrows})

    def inverse(self) -> "Cocycle":
        return Cocycle(self.groupoid, {x: v.conjugate() for x, v in self._values.items()})

    def precompose(self, arrow_map: Mapping[int, int]) -> "Cocycle":
        """x -> xi(arrow_map[x])."""
        return Cocycle(self.groupoid, {x: self._values[arrow_map[x]] for x in self.groupoid.arrows})

    def is_trivial(self) -> bool:
        return all(v.is_one for v in self._values.values())


def is_cocycle(xi: Cocycle) -> CocycleCheck:
    """Check xi(ab) = xi(a) xi(b) on every composable pair."""
    g = xi.groupoid
    for (a, b), c in sorted(g.comp_table.items()):
        if xi[c] != xi[a] * xi[b]:
            logger.debug(f"Cocycle identity fails at ({a},{b})")
            return CocycleCheck.error_result(
                f"not multiplicative at ({a},{b})", error_details=f"xi({c}) != xi({a}) xi({b})", pair=(a, b)
            )
    return CocycleCheck.success_result("multiplicative on every composable pair")


def require_cocycle(xi: Cocycle) -> Cocycle:
    check = is_cocycle(xi)
    if not check.success:
        raise NotACocycleError(check.message, pair=check.pair)
    return xi


def coboundary(g: FiniteGroupoid, f: CircleFunction) -> Cocycle:
    """f^(x) = conj(f(r(x))) f(s(x))."""
    f.require_total(g)
    return Cocycle(g, {x: f[g.rng[x]].conjugate() * f[g.src[x]] for x in g.arrows})
