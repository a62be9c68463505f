"""Invertible isometries versus the full group.

1 -> C(G^(0), T) -> invertible isometries -> F(G) -> 1 is split exact: sigma
is a surjective homomorphism with the diagonal circle functions as kernel,
B -> 1_B is a multiplicative section, and convolution of Lamperti elements
agrees with the semidirect product twisted by rho.
"""

import logging
from typing import List, Optional, Tuple

from ..bisections.bisection import multiply, unit_bisection
from ..bisections.full_group import FullGroup, full_group
from ..common.results import CheckResult, SequenceReport
from ..common.settings import get_settings
from ..convolution.algebra import convolve, diagonal, indicator
from ..convolution.lamperti import (
    LampertiElement,
    compose_lamperti,
    decompose_isometry,
    pi0_class,
    semidirect_multiply,
    sigma,
)
from ..core.groupoid import FiniteGroupoid
from ..norms.estimation import p_norm
from ..norms.regular import regular_rep
from .checks import CaseSampler, arrows_text, run_check

logger = logging.getLogger(__name__)

NORM_EXPONENTS = (1.0, 1.5, 3.0, float("inf"))
NORM_STARTS = 4
NORM_ITERS = 50


def _pair_failure(message: str, u: LampertiElement, v: LampertiElement) -> str:
    return f"{message} for {arrows_text(u.bisection)}*{arrows_text(v.bisection)}"


def check_sigma_homomorphism(pairs: List[Tuple[LampertiElement, LampertiElement]]) -> CheckResult:
    def failure(case: Tuple[LampertiElement, LampertiElement]) -> Optional[str]:
        u, v = case
        product = decompose_isometry(convolve(u.as_element(), v.as_element()))
        if sigma(product) != multiply(sigma(u), sigma(v)):
            return _pair_failure("sigma(uv) != sigma(u)sigma(v)", u, v)
        return None

    return run_check("sigma_homomorphism", pairs, failure)


def check_sigma_section(group: FullGroup, sampler: CaseSampler) -> CheckResult:
    """sigma(1_B) = B for every B: the section exists and sigma is onto."""

    def failure(b) -> Optional[str]:
        recovered = decompose_isometry(indicator(b))
        if recovered != LampertiElement.plain(b) or sigma(recovered) != b:
            return f"sigma(1_B) != B for B={arrows_text(b)}"
        return None

    return run_check("sigma_section", sampler.cases(group.elements), failure)


def check_sigma_kernel(g: FiniteGroupoid, group: FullGroup, sampler: CaseSampler) -> CheckResult:
    """Elements over the unit bisection are exactly the diagonal circle functions."""
    identity = unit_bisection(g)

    def failure(u: LampertiElement) -> Optional[str]:
        f = sampler.circle_function(g.units)
        if sigma(decompose_isometry(diagonal(g, f))) != identity:
            return f"diagonal {f!r} leaves the kernel"
        in_kernel = sigma(u) == identity
        if in_kernel != (u.as_element() == diagonal(g, u.f)):
            return f"kernel membership disagrees for {u!r}"
        return None

    cases = sampler.lamperti_elements(group)
    cases.append(LampertiElement(sampler.circle_function(g.units), identity))
    return run_check("sigma_kernel", cases, failure)


def check_section_multiplicative(group: FullGroup, sampler: CaseSampler) -> CheckResult:
    def failure(case) -> Optional[str]:
        a, b = case
        if convolve(indicator(a), indicator(b)) != indicator(multiply(a, b)):
            return f"1_A*1_B != 1_AB for A={arrows_text(a)} B={arrows_text(b)}"
        return None

    return run_check("section_multiplicative", sampler.pairs(group.elements), failure)


def check_semidirect_law(pairs: List[Tuple[LampertiElement, LampertiElement]]) -> CheckResult:
    def failure(case: Tuple[LampertiElement, LampertiElement]) -> Optional[str]:
        u, v = case
        composed = compose_lamperti(u, v)
        if composed != semidirect_multiply(u, v):
            return _pair_failure("convolution differs from the semidirect product", u, v)
        if composed.as_element() != convolve(u.as_element(), v.as_element()):
            return _pair_failure("compose_lamperti differs from convolution", u, v)
        return None

    return run_check("semidirect_law", pairs, failure)


def check_isometry_norms(elements: List[LampertiElement], seed: int) -> CheckResult:
    tol = get_settings().isometry_tol

    def failure(u: LampertiElement) -> Optional[str]:
        matrix = regular_rep(u.as_element())
        for p in NORM_EXPONENTS:
            estimate = p_norm(matrix, p, iters=NORM_ITERS, seed=seed, starts=NORM_STARTS)
            if abs(estimate.lower - 1.0) > tol or abs(estimate.upper - 1.0) > tol:
                return f"norm of {arrows_text(u.bisection)} at p={p} is [{estimate.lower:.6f},{estimate.upper:.6f}]"
        return None

    return run_check("isometry_norms", elements, failure)


def check_pi0(pairs: List[Tuple[LampertiElement, LampertiElement]]) -> CheckResult:
    """The component map is multiplicative and constant on phase deformations."""

    def failure(case: Tuple[LampertiElement, LampertiElement]) -> Optional[str]:
        u, v = case
        if pi0_class(compose_lamperti(u, v)) != multiply(pi0_class(u), pi0_class(v)):
            return _pair_failure("pi0 is not multiplicative", u, v)
        if pi0_class(u) != pi0_class(LampertiElement.plain(u.bisection)):
            return f"phases change the component of {arrows_text(u.bisection)}"
        return None

    return run_check("pi0", pairs, failure)


def verify_isometry_sequence(g: FiniteGroupoid, samples: int, seed: int) -> SequenceReport:
    logger.info(f"Verifying the isometry sequence on {g.describe()} with {samples} samples, seed {seed}")
    sampler = CaseSampler(samples, seed)
    group = full_group(g)
    pairs = list(zip(sampler.lamperti_elements(group), sampler.lamperti_elements(group)))
    checks = [
        check_sigma_homomorphism(pairs),
        check_sigma_section(group, sampler),
        check_sigma_kernel(g, group, sampler),
        check_section_multiplicative(group, sampler),
        check_semidirect_law(pairs),
        check_isometry_norms(sampler.lamperti_elements(group), seed),
        check_pi0(pairs),
    ]
    return SequenceReport.from_checks("isometry", checks)
