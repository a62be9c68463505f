"""Certified bounds for the l^p operator norm of a matrix.

The lower bound comes from a witness found by a duality-map power iteration
run from several starts; the upper bound is closed form (column sums for p = 1,
row sums for p = inf, Riesz-Thorin interpolation in between). For p in
{1, inf} both bounds coincide.
"""

import logging
import math
import threading
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np

from ..common.errors import InvalidNormParameterError
from ..common.settings import get_settings
from .regular import RegularRepMatrix

logger = logging.getLogger(__name__)

CLAMP_RELATIVE = 1e-12

MatrixLike = Union[RegularRepMatrix, np.ndarray]


@dataclass
class NormEstimate:
    """lower <= ||M||_p <= upper; `witness` is a unit vector with ||M w||_p = lower."""

    p: float
    lower: float
    upper: float
    witness: np.ndarray
    start_index: int = -1

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def parse_p(value: Union[str, float, int]) -> float:
    """Read p from text or a number; accepts "inf"."""
    try:
        p = float(value)
    except (TypeError, ValueError) as exc:
        raise InvalidNormParameterError(f"p must be a number or inf, got {value!r}") from exc
    if math.isnan(p) or p < 1:
        raise InvalidNormParameterError(f"p must lie in [1, inf], got {value}")
    return p


def vector_norm(x: np.ndarray, p: float) -> float:
    return float(np.linalg.norm(x, ord=p))


def _conjugate_exponent(p: float) -> float:
    if p == 1:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1)


def _phase(v: np.ndarray) -> np.ndarray:
    moduli = np.abs(v)
    out = np.zeros_like(v, dtype=complex)
    nonzero = moduli > 0
    out[nonzero] = v[nonzero] / moduli[nonzero]
    return out


def _dual(v: np.ndarray, r: float) -> Optional[np.ndarray]:
    """A vector z with ||z||_{r'} = 1 and <z, v> = ||v||_r, r' conjugate to r."""
    norm = vector_norm(v, r)
    if norm == 0:
        return None
    if r == 1:
        return _phase(v)
    if math.isinf(r):
        k = int(np.argmax(np.abs(v)))
        z = np.zeros_like(v, dtype=complex)
        z[k] = _phase(v[k:k + 1])[0]
        return z
    return np.abs(v) ** (r - 1) * _phase(v) / norm ** (r - 1)


def _as_arrays(matrix: MatrixLike) -> Tuple[np.ndarray, np.ndarray]:
    if isinstance(matrix, RegularRepMatrix):
        return matrix.to_complex(), matrix.abs_matrix()
    dense = np.asarray(matrix, dtype=complex)
    return dense, np.abs(dense)


def upper_bound(moduli: np.ndarray, p: float, dense: Optional[np.ndarray] = None) -> float:
    column = float(moduli.sum(axis=0).max()) if moduli.size else 0.0
    row = float(moduli.sum(axis=1).max()) if moduli.size else 0.0
    if p == 1:
        return column
    if math.isinf(p):
        return row
    bound = column ** (1 / p) * row ** (1 - 1 / p)
    if p == 2 and dense is not None and dense.size:
        spectral = float(np.linalg.norm(dense, 2))
        if spectral < bound - CLAMP_RELATIVE * max(1.0, bound):
            bound = spectral
    return bound


def _ascend(dense: np.ndarray, start: np.ndarray, p: float, iters: int) -> Tuple[float, np.ndarray]:
    q = _conjugate_exponent(p)
    x = start / vector_norm(start, p)
    best_value, best_vector = vector_norm(dense @ x, p), x
    adjoint = dense.conj().T
    for _ in range(iters):
        z = _dual(dense @ x, p)
        if z is None:
            break
        w = _dual(adjoint @ z, q)
        if w is None:
            break
        x = w / vector_norm(w, p)
        value = vector_norm(dense @ x, p)
        if value > best_value:
            best_value, best_vector = value, x
    return best_value, best_vector


def _run_starts(run, indexed_starts, workers: int):
    """Run every start, spread round-robin over `workers` threads."""
    if workers <= 1 or len(indexed_starts) <= 1:
        return [run(item) for item in indexed_starts]

    results = []
    lock = threading.Lock()

    def worker(chunk):
        local = [run(item) for item in chunk]
        with lock:
            results.extend(local)

    threads = [
        threading.Thread(target=worker, args=(indexed_starts[k::workers],), daemon=True)
        for k in range(min(workers, len(indexed_starts)))
    ]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    # completion order varies; the caller picks by (value, index)
    return results


def p_norm(
    matrix: MatrixLike,
    p: Union[str, float],
    iters: Optional[int] = None,
    seed: Optional[int] = None,
    starts: Optional[int] = None,
) -> NormEstimate:
    """Lower and upper bounds for ||M||_p, deterministic for a fixed seed."""
    p = parse_p(p)
    settings = get_settings()
    iters = settings.norm_iters if iters is None else iters
    seed = settings.norm_seed if seed is None else seed
    starts = settings.norm_starts if starts is None else starts

    dense, moduli = _as_arrays(matrix)
    n = dense.shape[1]
    upper = upper_bound(moduli, p, dense)

    if p == 1:
        j = int(np.argmax(moduli.sum(axis=0)))
        witness = np.zeros(n, dtype=complex)
        witness[j] = 1.0
        return NormEstimate(p=p, lower=upper, upper=upper, witness=witness, start_index=0)
    if math.isinf(p):
        i = int(np.argmax(moduli.sum(axis=1)))
        witness = np.conj(_phase(dense[i]))
        if not witness.any():
            witness[0] = 1.0
        return NormEstimate(p=p, lower=upper, upper=upper, witness=witness, start_index=0)

    column_norms = [vector_norm(moduli[:, j], p) for j in range(n)]
    best_column = int(np.argmax(column_norms))
    basis = np.zeros(n, dtype=complex)
    basis[best_column] = 1.0

    generator = np.random.default_rng(seed)
    random_starts = generator.standard_normal((starts, n)) + 1j * generator.standard_normal((starts, n))
    start_vectors: List[np.ndarray] = [basis] + list(random_starts)

    def run(indexed: Tuple[int, np.ndarray]) -> Tuple[float, int, np.ndarray]:
        index, start = indexed
        value, vector = _ascend(dense, start, p, iters)
        if index == 0 and column_norms[best_column] >= value:
            value, vector = column_norms[best_column], basis
        return value, index, vector

    results = _run_starts(run, list(enumerate(start_vectors)), settings.threads or 1)

    value, index, vector = min(results, key=lambda item: (-item[0], item[1]))
    if value > upper:
        if value - upper <= CLAMP_RELATIVE * max(1.0, upper):
            logger.debug(f"Clamping lower bound {value!r} to upper bound {upper!r}")
        else:
            logger.warning(f"Lower bound {value} exceeds upper bound {upper} at p={p}")
        value = upper
    logger.debug(f"p_norm at p={p}: lower={value:.6f} upper={upper:.6f} from start {index}")
    return NormEstimate(p=p, lower=value, upper=upper, witness=vector, start_index=index)
