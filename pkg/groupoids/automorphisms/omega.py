"""Upsilon, Phi and Omega: recovering a groupoid automorphism from an algebra automorphism.

For an automorphism alpha of C_c(G):
- Upsilon_alpha is the unit permutation dual to alpha on the diagonal,
  alpha(delta_w) = delta_{Upsilon(w)};
- Phi_alpha(B) is the support of alpha(1_B), which must be a Lamperti element;
- Omega_alpha(x) is the arrow of Phi_alpha(B) with range Upsilon(r(x)), for any
  bisection B through x.
Then alpha = Gamma(xi) o lift(Omega_alpha) for a unique cocycle xi.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from ..bisections.bisection import Bisection, UnitPermutation, maximal_bisection_through
from ..cohomology.cocycles import Cocycle
from ..common.errors import (
    DiagonalNotPreservedError,
    GroupoidError,
    NotAutomorphismError,
    NotSpatialError,
    NotWellDefinedError,
)
from ..convolution.algebra import indicator
from ..convolution.circle import CircleScalar
from ..convolution.lamperti import circle_angle, decompose_partial_isometry
from ..convolution.scalars import CyclotomicNumber
from .groupoid_aut import GroupoidAut, automorphism_failure
from .linear_maps import AlgebraLinearMap, gamma, lift

logger = logging.getLogger(__name__)


def upsilon(alpha: AlgebraLinearMap) -> UnitPermutation:
    g = alpha.groupoid
    perm: Dict[int, int] = {}
    for w in g.units:
        image = alpha.columns[w]
        arrows = image.support()
        if len(arrows) != 1 or not g.is_unit(arrows[0]) or image[arrows[0]] != CyclotomicNumber.rational(1):
            raise DiagonalNotPreservedError(f"image of the unit indicator at {w} is not a unit indicator", unit=w)
        perm[w] = arrows[0]
    if len(set(perm.values())) != len(perm):
        raise DiagonalNotPreservedError("two unit indicators share an image", unit=min(perm))
    return perm


def phi(alpha: AlgebraLinearMap, b: Bisection) -> Bisection:
    """sigma(alpha(1_B))."""
    image = alpha(indicator(b))
    try:
        return decompose_partial_isometry(image).bisection
    except GroupoidError as exc:
        raise NotSpatialError(
            f"image of 1_B for B = {list(b.arrows)} is not a Lamperti element", bisection=b.arrows
        ) from exc


def omega_image(alpha: AlgebraLinearMap, arrow: int, b: Bisection, units: UnitPermutation) -> int:
    """The arrow of Phi_alpha(B) with range Upsilon(r(arrow))."""
    g = alpha.groupoid
    target = units[g.rng[arrow]]
    image = phi(alpha, b).by_range.get(target)
    if image is None:
        raise NotSpatialError(
            f"Phi of {list(b.arrows)} has no arrow with range {target}", bisection=b.arrows
        )
    return image


def omega(alpha: AlgebraLinearMap, extra: Optional[Iterable[Bisection]] = None) -> GroupoidAut:
    """Omega_alpha, checked on the singleton and a maximal bisection through each arrow.

    `extra` adds further bisections to the consistency check.
    """
    g = alpha.groupoid
    units = upsilon(alpha)
    extra_bisections: List[Bisection] = list(extra or [])
    images = []
    for x in g.arrows:
        candidates = [Bisection.of(g, [x]), maximal_bisection_through(g, x)]
        candidates += [b for b in extra_bisections if x in b]
        chosen = omega_image(alpha, x, candidates[0], units)
        for b in candidates[1:]:
            other = omega_image(alpha, x, b, units)
            if other != chosen:
                raise NotWellDefinedError(
                    f"Omega at arrow {x} depends on the bisection: {chosen} vs {other}",
                    arrow=x,
                    images=(chosen, other),
                )
        images.append(chosen)
    failure = automorphism_failure(g, images)
    if failure is not None:
        raise NotAutomorphismError(f"Omega is not an automorphism at arrow {failure}", arrow=failure)
    return GroupoidAut(g, tuple(images))


@dataclass(eq=False)
class AlgebraAutParam:
    """alpha = Gamma(xi) o lift(theta)."""

    xi: Cocycle
    theta: GroupoidAut

    def __iter__(self):
        return iter((self.xi, self.theta))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraAutParam):
            return NotImplemented
        return self.xi == other.xi and self.theta == other.theta

    def to_linear_map(self) -> AlgebraLinearMap:
        return gamma(self.xi) * lift(self.theta)


def validate_structure(alpha: AlgebraLinearMap) -> None:
    """Raise NotAutomorphismError unless alpha is unital, multiplicative and diagonal preserving."""
    if not alpha.is_unital():
        raise NotAutomorphismError("map is not unital")
    pair = alpha.multiplicativity_failure()
    if pair is not None:
        raise NotAutomorphismError(f"map is not multiplicative at basis pair {pair}", arrow=pair[0])
    unit = alpha.diagonal_failure()
    if unit is not None:
        raise NotAutomorphismError(f"map moves the unit indicator at {unit} off the diagonal", arrow=unit)


def decompose_aut(alpha: AlgebraLinearMap) -> AlgebraAutParam:
    """(xi, theta) with Gamma(xi) o lift(theta) = alpha exactly."""
    validate_structure(alpha)
    g = alpha.groupoid
    theta = omega(alpha)
    beta = alpha * lift(theta.inverse())
    values: Dict[int, CircleScalar] = {}
    for x in g.arrows:
        column = beta.columns[x]
        if column.support() != (x,):
            raise NotAutomorphismError(f"alpha o lift(theta)^-1 moves arrow {x}", arrow=x)
        angle = circle_angle(column[x])
        if angle is None:
            raise NotAutomorphismError(f"coefficient at arrow {x} is off the unit circle", arrow=x)
        values[x] = CircleScalar(angle)
    xi = Cocycle(g, values)
    try:
        rebuilt = gamma(xi) * lift(theta)
    except GroupoidError as exc:
        raise NotAutomorphismError(f"extracted phases do not form a cocycle: {exc}") from exc
    mismatch = rebuilt.first_difference(alpha)
    if mismatch is not None:
        raise NotAutomorphismError(f"reconstruction differs at basis arrow {mismatch}", arrow=mismatch)
    logger.debug(f"Decomposed automorphism into theta={list(theta.images)}")
    return AlgebraAutParam(xi=xi, theta=theta)
