"""Algebra automorphisms of C_c(G) against groupoid data.

- automorphism: 1 -> Z^1(G, T) -> Aut(C_c(G), D) -> Aut(G) -> 1 via gamma and
  omega, split by lift;
- inner: 1 -> B^1 -> Inn -> F(G) -> 1 via coboundaries, inner automorphisms
  of invertible isometries and conjugation;
- outer: 1 -> H^1 -> Out -> Aut(G)/F(G) -> 1.

The inner and outer sequences need an effective groupoid.
"""

import itertools
import logging
from typing import List, Optional, Tuple

from ..automorphisms.groupoid_aut import GroupoidAut, ad_bisection, ad_bisection_left, aut_group
from ..automorphisms.linear_maps import AlgebraLinearMap, gamma, inner, lift
from ..automorphisms.omega import AlgebraAutParam, decompose_aut, omega, phi, upsilon
from ..automorphisms.outer import outer_quotient, require_effective
from ..bisections.bisection import Bisection, all_bisections, inverse, unit_bisection
from ..bisections.full_group import full_group
from ..cohomology.cocycles import Cocycle, coboundary
from ..cohomology.h1 import CocycleGroup, cocycle_group, h1
from ..common.results import SequenceReport
from ..convolution.circle import CircleFunction
from ..convolution.lamperti import LampertiElement
from ..core.groupoid import FiniteGroupoid
from ..core.structure import orbits
from .checks import CaseSampler, arrows_text, run_check

logger = logging.getLogger(__name__)

MAX_GENERATOR_POWER = 4


def random_cocycle(g: FiniteGroupoid, cocycles: CocycleGroup, sampler: CaseSampler) -> Cocycle:
    """A product of generator powers and a random coboundary."""
    xi = Cocycle.trivial(g)
    for generator in cocycles.generators():
        for _ in range(int(sampler.rng.integers(0, MAX_GENERATOR_POWER))):
            xi = xi * generator
    return xi * coboundary(g, sampler.circle_function(g.units))


def _aut_text(theta: GroupoidAut) -> str:
    return "[" + ",".join(str(x) for x in theta.images) + "]"


def round_trip_params(
    g: FiniteGroupoid, cocycles: CocycleGroup, automorphisms: List[GroupoidAut], sampler: CaseSampler
) -> List[AlgebraAutParam]:
    """Every theta against every generator cocycle when Aut(G) is small, random pairs otherwise."""
    if len(automorphisms) <= sampler.exhaustive_limit:
        xis = [Cocycle.trivial(g)] + cocycles.generators()
        params = [AlgebraAutParam(xi=xi, theta=theta) for theta in automorphisms for xi in xis]
        params.extend(
            AlgebraAutParam(xi=random_cocycle(g, cocycles, sampler), theta=theta) for theta in automorphisms
        )
        return params
    return [
        AlgebraAutParam(xi=random_cocycle(g, cocycles, sampler), theta=theta)
        for theta in sampler.cases(automorphisms)
    ]


# automorphism sequence


def verify_automorphism_sequence(g: FiniteGroupoid, samples: int, seed: int) -> SequenceReport:
    logger.info(f"Verifying the automorphism sequence on {g.describe()} with {samples} samples, seed {seed}")
    sampler = CaseSampler(samples, seed)
    cocycles = cocycle_group(g)
    automorphisms = aut_group(g)
    xis = [random_cocycle(g, cocycles, sampler) for _ in range(samples)] + cocycles.generators()
    thetas = sampler.cases(automorphisms)
    params = round_trip_params(g, cocycles, automorphisms, sampler)
    alphas = [param.to_linear_map() for param in params]
    extra = list(itertools.islice(all_bisections(g), sampler.exhaustive_limit))

    def gamma_homomorphism(case: Tuple[Cocycle, Cocycle]) -> Optional[str]:
        xi, eta = case
        if gamma(xi * eta) != gamma(xi) * gamma(eta):
            return f"gamma(xi*eta) != gamma(xi)gamma(eta) for xi={xi!r}"
        return None

    def gamma_injective(xi: Cocycle) -> Optional[str]:
        if (gamma(xi) == AlgebraLinearMap.identity(g)) != xi.is_trivial():
            return f"gamma kernel disagrees at {xi!r}"
        return None

    def gamma_multiplicative(xi: Cocycle) -> Optional[str]:
        pair = gamma(xi).multiplicativity_failure()
        return None if pair is None else f"gamma(xi) not multiplicative at {pair}"

    def lift_homomorphism(case: Tuple[GroupoidAut, GroupoidAut]) -> Optional[str]:
        a, b = case
        if lift(a * b) != lift(a) * lift(b):
            return f"lift(ab) != lift(a)lift(b) for a={_aut_text(a)} b={_aut_text(b)}"
        return None

    def lift_injective(case: Tuple[GroupoidAut, GroupoidAut]) -> Optional[str]:
        a, b = case
        if (a == b) != (lift(a) == lift(b)):
            return f"lift identifies {_aut_text(a)} and {_aut_text(b)}"
        return None

    def omega_gamma_trivial(xi: Cocycle) -> Optional[str]:
        theta = omega(gamma(xi))
        return None if theta.is_identity else f"omega(gamma(xi)) = {_aut_text(theta)}"

    def omega_lift_identity(theta: GroupoidAut) -> Optional[str]:
        recovered = omega(lift(theta))
        return None if recovered == theta else f"omega(lift({_aut_text(theta)})) = {_aut_text(recovered)}"

    def decompose_roundtrip(case: Tuple[AlgebraAutParam, AlgebraLinearMap]) -> Optional[str]:
        param, alpha = case
        recovered = decompose_aut(alpha)
        if recovered != param or recovered.to_linear_map() != alpha:
            return f"decompose_aut misses theta={_aut_text(param.theta)}"
        # lift(theta)^-1 o alpha carries xi o theta instead of xi
        if lift(param.theta.inverse()) * alpha != gamma(param.xi.precompose(param.theta.as_mapping())):
            return f"right-hand phases are not xi o theta for theta={_aut_text(param.theta)}"
        return None

    def omega_kernel(case: Tuple[AlgebraAutParam, AlgebraLinearMap]) -> Optional[str]:
        """omega(alpha) is trivial only for alpha = gamma(xi)."""
        param, alpha = case
        in_kernel = omega(alpha).is_identity
        if in_kernel != param.theta.is_identity:
            return f"omega kernel disagrees at theta={_aut_text(param.theta)}"
        if in_kernel and alpha != gamma(param.xi):
            return f"kernel element is not gamma(xi) for xi={param.xi!r}"
        return None

    def omega_well_defined(alpha: AlgebraLinearMap) -> Optional[str]:
        omega(alpha, extra=extra)
        return None

    def omega_homomorphism(case: Tuple[AlgebraLinearMap, AlgebraLinearMap]) -> Optional[str]:
        a, b = case
        if omega(a * b) != omega(a) * omega(b):
            return "omega(ab) != omega(a)omega(b)"
        return None

    def upsilon_phi_compatible(alpha: AlgebraLinearMap) -> Optional[str]:
        units = upsilon(alpha)
        for b in extra:
            image = phi(alpha, b)
            if frozenset(units[w] for w in b.src_set) != image.src_set:
                return f"upsilon(src B) != src(phi(B)) for B={arrows_text(b)}"
            if frozenset(units[w] for w in b.rng_set) != image.rng_set:
                return f"upsilon(rng B) != rng(phi(B)) for B={arrows_text(b)}"
        return None

    checks = [
        run_check("gamma_homomorphism", list(zip(xis, xis[1:] + xis[:1])), gamma_homomorphism),
        run_check("gamma_injective", xis + [Cocycle.trivial(g)], gamma_injective),
        run_check("gamma_multiplicative", xis, gamma_multiplicative),
        run_check("lift_homomorphism", sampler.pairs(automorphisms), lift_homomorphism),
        run_check("lift_injective", sampler.pairs(automorphisms), lift_injective),
        run_check("omega_gamma_trivial", xis, omega_gamma_trivial),
        run_check("omega_lift_identity", thetas, omega_lift_identity),
        run_check("omega_kernel", list(zip(params, alphas)), omega_kernel),
        run_check("decompose_roundtrip", list(zip(params, alphas)), decompose_roundtrip),
        run_check("omega_well_defined", alphas, omega_well_defined),
        run_check("omega_homomorphism", list(zip(alphas, alphas[1:] + alphas[:1])), omega_homomorphism),
        run_check("upsilon_phi_compatible", alphas, upsilon_phi_compatible),
    ]
    return SequenceReport.from_checks("automorphism", checks)


# inner sequence


def verify_inner_sequence(g: FiniteGroupoid, samples: int, seed: int) -> SequenceReport:
    require_effective(g)
    logger.info(f"Verifying the inner sequence on {g.describe()} with {samples} samples, seed {seed}")
    sampler = CaseSampler(samples, seed)
    group = full_group(g)
    identity_bisection = unit_bisection(g)
    bisections = sampler.cases(group.elements)
    functions = [sampler.circle_function(g.units) for _ in range(samples)]

    def coboundary_inner(f: CircleFunction) -> Optional[str]:
        if gamma(coboundary(g, f)) != inner(LampertiElement(f, identity_bisection)):
            return f"gamma(coboundary f) != inner(f) for f={f!r}"
        return None

    def omega_inner_is_conjugation(b: Bisection) -> Optional[str]:
        u = LampertiElement(sampler.circle_function(g.units), b)
        if omega(inner(u)) != ad_bisection(b):
            return f"omega(inner(f 1_B)) != ad(B) for B={arrows_text(b)}"
        return None

    def conjugation_injective(case: Tuple[Bisection, Bisection]) -> Optional[str]:
        a, b = case
        if a != b and ad_bisection_left(a) == ad_bisection_left(b):
            return f"ad({arrows_text(a)}) = ad({arrows_text(b)})"
        return None

    def ad_left_equals_ad_inverse(b: Bisection) -> Optional[str]:
        if ad_bisection_left(b) != ad_bisection(inverse(b)):
            return f"B x B^-1 differs from ad(B^-1) for B={arrows_text(b)}"
        return None

    def section_inner(b: Bisection) -> Optional[str]:
        if inner(LampertiElement.plain(b)) != lift(ad_bisection(b)):
            return f"inner(1_B) != lift(ad B) for B={arrows_text(b)}"
        return None

    def inner_kernel(b: Bisection) -> Optional[str]:
        """inner(f 1_B) is trivial iff B = G^(0) and f is constant on orbits."""
        u = LampertiElement(sampler.circle_function(g.units), b)
        trivial = inner(u) == AlgebraLinearMap.identity(g)
        orbitwise_constant = all(len({u.f[w] for w in orbit}) == 1 for orbit in orbits(g))
        if trivial != (b == identity_bisection and orbitwise_constant):
            return f"inner kernel disagrees at B={arrows_text(b)}"
        if b == identity_bisection:
            constant = LampertiElement(CircleFunction.constant(g.units, sampler.angle()), b)
            if inner(constant) != AlgebraLinearMap.identity(g):
                return "inner of a constant phase is not trivial"
        return None

    checks = [
        run_check("coboundary_inner", functions, coboundary_inner),
        run_check("omega_inner_is_conjugation", bisections, omega_inner_is_conjugation),
        run_check("conjugation_injective", sampler.pairs(group.elements), conjugation_injective),
        run_check("ad_left_equals_ad_inverse", bisections, ad_left_equals_ad_inverse),
        run_check("section_inner", bisections, section_inner),
        run_check("inner_kernel", bisections + [identity_bisection], inner_kernel),
    ]
    return SequenceReport.from_checks("inner", checks)


# outer sequence


def verify_outer_sequence(g: FiniteGroupoid, samples: int, seed: int) -> SequenceReport:
    require_effective(g)
    logger.info(f"Verifying the outer sequence on {g.describe()} with {samples} samples, seed {seed}")
    sampler = CaseSampler(samples, seed)
    group = full_group(g)
    quotient = outer_quotient(g, group=group)
    description = h1(g)
    cocycles = description.cocycles
    identity_bisection = unit_bisection(g)
    thetas = sampler.cases(quotient.automorphisms)
    cases = [
        (random_cocycle(g, cocycles, sampler), theta, sampler.lamperti(group)) for theta in thetas[:samples]
    ]

    def coset_identity(case: Tuple[Cocycle, GroupoidAut, LampertiElement]) -> Optional[str]:
        """gamma(xi) lift(theta) inner(u) has the class of xi and the coset of theta."""
        xi, theta, u = case
        alpha = gamma(xi) * lift(theta) * inner(u)
        xi_prime, theta_prime = decompose_aut(alpha)
        if description.class_of(xi_prime) != description.class_of(xi):
            return f"cohomology class moved under inner twist by {arrows_text(u.bisection)}"
        if quotient.coset_of(theta_prime) != quotient.coset_of(theta):
            return f"coset of {_aut_text(theta)} moved under inner twist"
        return None

    def order_count(_: int) -> Optional[str]:
        if len(quotient.automorphisms) != len(quotient.inner) * quotient.order:
            return f"|Aut| = {len(quotient.automorphisms)} but |F| * |Aut/F| = {len(quotient.inner) * quotient.order}"
        if len(quotient.inner) != len(group):
            return f"|ad(F)| = {len(quotient.inner)} but |F| = {len(group)}"
        return None

    def gamma_bar_injective(xi: Cocycle) -> Optional[str]:
        """gamma(xi) is inner iff xi is a coboundary."""
        is_boundary, f = description.is_coboundary(xi)
        if is_boundary:
            if gamma(xi) != inner(LampertiElement(f, identity_bisection)):
                return f"coboundary {xi!r} is not inner"
        elif description.class_of(xi).is_trivial:
            return f"{xi!r} has trivial class but no coboundary witness"
        return None

    def split(theta: GroupoidAut) -> Optional[str]:
        xi, recovered = decompose_aut(lift(theta))
        if not xi.is_trivial() or quotient.coset_of(recovered) != quotient.coset_of(theta):
            return f"lift does not split the quotient at {_aut_text(theta)}"
        return None

    xis = [random_cocycle(g, cocycles, sampler) for _ in range(samples)] + cocycles.generators()
    checks = [
        run_check("coset_identity", cases, coset_identity),
        run_check("order_count", [0], order_count),
        run_check("gamma_bar_injective", xis, gamma_bar_injective),
        run_check("split", thetas, split),
    ]
    return SequenceReport.from_checks("outer", checks)

