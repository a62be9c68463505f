"""One function per CLI command, each returning an ordered KEY=VALUE report."""

import logging
import math
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from ..automorphisms.groupoid_aut import aut_group
from ..bisections.full_group import full_group, rho_image, rho_kernel
from ..builders.parser import parse_element, parse_spec
from ..cohomology.characters import format_factors
from ..cohomology.h1 import h1
from ..common.errors import ConverseRequiresPNot2Error, NotInvertibleError, SizeLimitError
from ..common.results import CommandResult
from ..common.settings import get_settings
from ..convolution.lamperti import decompose_isometry
from ..core.groupoid import FiniteGroupoid
from ..core.structure import isotropy_summary, orbits
from ..core.validation import require_valid, validate
from ..norms.estimation import p_norm, parse_p
from ..norms.isometry import certify_invertible_isometry
from ..norms.regular import i_norm, regular_rep
from ..verification.runner import verify_sequences

logger = logging.getLogger(__name__)


def load_groupoid(path: Union[str, Path]) -> FiniteGroupoid:
    """Parse and build a spec file; explicit tables are left unvalidated."""
    text = Path(path).read_text(encoding="utf-8")
    spec = parse_spec(text)
    g = spec.build()
    logger.info(f"Loaded {g.describe()} from {path}")
    return g


def _ids(values: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def _real(value: float) -> str:
    return f"{round(value, 6) + 0.0:.6f}"


def _complex(value: complex) -> str:
    return f"{_real(value.real)}{'+' if round(value.imag, 6) >= 0 else '-'}{_real(abs(value.imag))}i"


def _angle(angle: Fraction) -> str:
    return str(angle)


def _exact_or_float(value: Union[Fraction, float]) -> str:
    return str(value) if isinstance(value, Fraction) else _real(value)


def run_validate(g: FiniteGroupoid) -> CommandResult:
    report = validate(g)
    result = CommandResult(command="validate", exit_code=0 if report.valid else 1)
    result.add("ARROWS", g.num_arrows)
    result.add("UNITS", len(g.units))
    result.add("VALID", "true" if report.valid else "false")
    for i, violation in enumerate(report.violations):
        result.add(f"VIOLATION_{i}", violation)
    return result


def run_orbits(g: FiniteGroupoid) -> CommandResult:
    require_valid(g)
    blocks = orbits(g)
    result = CommandResult(command="orbits")
    result.add("ORBITS", len(blocks))
    for i, block in enumerate(blocks):
        result.add(f"ORBIT_{i}", _ids(block))
    return result


def run_full_group(g: FiniteGroupoid, limit: Optional[int] = None) -> CommandResult:
    require_valid(g)
    group = full_group(g, limit=limit)
    result = CommandResult(command="full-group")
    result.add("ORDER", group.order)
    result.add("RHO_IMAGE_ORDER", len(rho_image(group)))
    result.add("RHO_KERNEL_ORDER", len(rho_kernel(group)))
    for i, b in enumerate(group):
        result.add(f"BISECTION_{i}", _ids(b.arrows))
    return result


def run_h1(g: FiniteGroupoid) -> CommandResult:
    require_valid(g)
    description = h1(g)
    summary = isotropy_summary(g)
    result = CommandResult(command="h1")
    result.add("H1", description)
    result.add("TORUS_RANK_Z1", description.torus_rank)
    for i, (orbit, iso) in enumerate(zip(description.cocycles.orbits, summary.per_orbit)):
        result.add(f"ORBIT_{i}_BASE", orbit.base)
        result.add(f"ORBIT_{i}_ISOTROPY_ORDER", iso.order)
        result.add(f"ORBIT_{i}_H1", format_factors(orbit.invariant_factors))
        for j, chi in enumerate(orbit.characters):
            result.add(f"ORBIT_{i}_CHARACTER_{j}", ",".join(f"{h}:{_angle(chi[h])}" for h in sorted(chi)))
    return result


def run_norm(
    g: FiniteGroupoid,
    element: str,
    p: str,
    iters: Optional[int] = None,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
) -> CommandResult:
    require_valid(g)
    settings = get_settings()
    if g.num_arrows > settings.max_norm_arrows:
        raise SizeLimitError(
            f"norm estimation is limited to {settings.max_norm_arrows} arrows, got {g.num_arrows}",
            limit=settings.max_norm_arrows,
        )
    exponent = parse_p(p)
    a = parse_element(element, g)
    estimate = p_norm(regular_rep(a), exponent, iters=iters, seed=seed)
    try:
        status = certify_invertible_isometry(a, exponent, tol=tol, iters=iters, seed=seed).status
    except ConverseRequiresPNot2Error:
        status = "undecided"
    except NotInvertibleError:
        status = "not-invertible"

    result = CommandResult(command="norm")
    result.add("P", "inf" if math.isinf(exponent) else p)
    result.add("I_NORM", _exact_or_float(i_norm(a)))
    result.add("LOWER", _real(estimate.lower))
    result.add("UPPER", _real(estimate.upper))
    result.add("WITNESS", ",".join(_complex(complex(v)) for v in np.asarray(estimate.witness)))
    result.add("ISOMETRY", status)
    return result


def run_decompose(g: FiniteGroupoid, element: str) -> CommandResult:
    require_valid(g)
    u = decompose_isometry(parse_element(element, g))
    result = CommandResult(command="decompose")
    result.add("BISECTION", _ids(u.bisection.arrows))
    for unit, value in u.f.items():
        result.add(f"PHASE_{unit}", _angle(value.angle))
    return result


def run_aut(g: FiniteGroupoid, limit: Optional[int] = None) -> CommandResult:
    require_valid(g)
    automorphisms = aut_group(g, limit=limit)
    result = CommandResult(command="aut")
    result.add("ORDER", len(automorphisms))
    for i, theta in enumerate(automorphisms):
        result.add(f"AUT_{i}", _ids(theta.images))
    return result


def run_verify(g: FiniteGroupoid, sequence: str, samples: int, seed: Optional[int] = None) -> CommandResult:
    report = verify_sequences(g, sequence, samples=samples, seed=seed)
    result = CommandResult(command="verify", exit_code=0 if report.success else 1)
    for check in report.checks:
        result.add("CHECK", f"{check.check_id} STATUS={check.status} WITNESS={check.witness}")
    result.add("STATUS", "pass" if report.success else "fail")
    return result
