"""Certification and refutation of invertible isometries in C_c(G).

An element is an invertible isometry at p != 2 exactly when it has Lamperti
form f * 1_B with B full. Lamperti elements get closed-form certificates;
everything else gets a numerical witness ||lambda(a) x||_p > (1 + margin)||x||_p
(or the same for the inverse) when one can be found.
"""

import logging
from typing import Optional, Union

import numpy as np

from ..common.errors import (
    ConverseRequiresPNot2Error,
    NotCircleValuedError,
    NotFullBisectionError,
    NotInvertibleError,
)
from ..common.results import IsometryCertificate
from ..common.settings import get_settings
from ..convolution.algebra import AlgebraElement
from ..convolution.lamperti import decompose_isometry
from .estimation import NormEstimate, p_norm, parse_p
from .regular import regular_rep

logger = logging.getLogger(__name__)

CONDITION_LIMIT = 1e12


def _serialize(vector: np.ndarray):
    return [(float(v.real), float(v.imag)) for v in vector]


def certify_invertible_isometry(
    a: AlgebraElement,
    p: Union[str, float],
    tol: Optional[float] = None,
    iters: Optional[int] = None,
    seed: Optional[int] = None,
) -> IsometryCertificate:
    """success is True iff `a` decomposes as f * 1_B with B full.

    Raises ConverseRequiresPNot2Error for non-Lamperti input at p = 2 and
    NotInvertibleError when lambda(a) has no usable inverse.
    """
    p = parse_p(p)
    settings = get_settings()
    tol = settings.isometry_tol if tol is None else tol

    try:
        element = decompose_isometry(a)
    except (NotFullBisectionError, NotCircleValuedError) as exc:
        reason = str(exc)
    else:
        forward = p_norm(regular_rep(a), p, iters=iters, seed=seed)
        backward = p_norm(regular_rep(element.inverse().as_element()), p, iters=iters, seed=seed)
        exact_one = all(
            abs(bound - 1.0) <= tol
            for bound in (forward.lower, forward.upper, backward.lower, backward.upper)
        )
        if not exact_one:
            logger.warning(f"Lamperti element has norm bounds off 1 at p={p}: {forward}, {backward}")
        logger.info(f"Certified invertible isometry on bisection {list(element.bisection.arrows)} at p={p}")
        return IsometryCertificate.success_result(
            "Lamperti form with full support; norms of a and a^-1 equal 1",
            data={"bisection": list(element.bisection.arrows), "norms_exact": exact_one},
            status="certified",
            p=p,
            norm_lower=forward.lower,
            norm_upper=forward.upper,
            inverse_norm_lower=backward.lower,
            inverse_norm_upper=backward.upper,
            witness=_serialize(forward.witness),
            witness_direction="forward",
        )

    if p == 2:
        raise ConverseRequiresPNot2Error(
            "non-Lamperti invertible isometries exist at p = 2; pick p != 2 to refute"
        )

    dense = regular_rep(a).to_complex()
    try:
        inverse_matrix = np.linalg.inv(dense)
    except np.linalg.LinAlgError as exc:
        raise NotInvertibleError("element has no inverse in C_c(G)") from exc
    if np.linalg.cond(dense) > CONDITION_LIMIT:
        raise NotInvertibleError("element is numerically singular")

    margin = settings.refutation_margin
    forward = p_norm(dense, p, iters=iters, seed=seed)
    backward: Optional[NormEstimate] = None
    if forward.lower > 1 + margin:
        direction, witness_estimate = "forward", forward
    else:
        backward = p_norm(inverse_matrix, p, iters=iters, seed=seed)
        direction, witness_estimate = ("backward", backward) if backward.lower > 1 + margin else (None, None)

    fields = dict(
        p=p,
        norm_lower=forward.lower,
        norm_upper=forward.upper,
        inverse_norm_lower=backward.lower if backward else None,
        inverse_norm_upper=backward.upper if backward else None,
    )
    if witness_estimate is None:
        logger.warning(f"No refutation witness above margin {margin} at p={p}")
        return IsometryCertificate.error_result(
            "not Lamperti; norm refutation inconclusive", error_details=reason, status="inconclusive", **fields
        )
    logger.info(f"Refuted isometry at p={p} with {direction} witness, norm >= {witness_estimate.lower:.6f}")
    return IsometryCertificate.error_result(
        f"not an invertible isometry: {direction} norm >= {witness_estimate.lower:.6f}",
        error_details=reason,
        status="refuted",
        witness=_serialize(witness_estimate.witness),
        witness_direction=direction,
        **fields,
    )
