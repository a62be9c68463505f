"""Dispatch for `verify --theorem ...` and its `--sequence` alias."""

import logging
from typing import Callable, Dict, Optional

from ..common.results import SequenceReport
from ..common.settings import get_settings
from ..core.groupoid import FiniteGroupoid
from ..core.validation import require_valid
from .automorphism_sequences import (
    verify_automorphism_sequence,
    verify_inner_sequence,
    verify_outer_sequence,
)
from .isometry_sequence import verify_isometry_sequence

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 20

SEQUENCES: Dict[str, Callable[[FiniteGroupoid, int, int], SequenceReport]] = {
    "isometry": verify_isometry_sequence,
    "automorphism": verify_automorphism_sequence,
    "inner": verify_inner_sequence,
    "outer": verify_outer_sequence,
}

# Labels accepted by `verify --theorem`.
THEOREMS: Dict[str, str] = {
    "2.6": "isometry",
    "3.7A": "automorphism",
    "3.7I": "inner",
    "3.7O": "outer",
}


def resolve_sequence(name: str) -> str:
    """Map a theorem label or sequence name to a sequence name; KeyError if neither."""
    sequence = THEOREMS.get(name, name)
    if sequence not in SEQUENCES:
        raise KeyError(name)
    return sequence


def verify_sequences(
    g: FiniteGroupoid, sequence: str, samples: int = DEFAULT_SAMPLES, seed: Optional[int] = None
) -> SequenceReport:
    """Run every check of one split sequence, named directly or by theorem label."""
    sequence = resolve_sequence(sequence)
    require_valid(g)
    verifier = SEQUENCES[sequence]
    seed = get_settings().norm_seed if seed is None else seed
    report = verifier(g, samples, seed)
    logger.info(f"Sequence {sequence}: {report.message}")
    return report
