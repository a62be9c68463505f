"""Property checks for the split exact sequences relating C_c(G) to G.

Each verifier returns a SequenceReport whose checks are sorted by id; runs are
exhaustive on small inputs and seeded-random otherwise.
"""

from .checks import CaseSampler, run_check
from .isometry_sequence import verify_isometry_sequence
from .automorphism_sequences import (
    random_cocycle,
    round_trip_params,
    verify_automorphism_sequence,
    verify_inner_sequence,
    verify_outer_sequence,
)
from .runner import SEQUENCES, THEOREMS, DEFAULT_SAMPLES, resolve_sequence, verify_sequences

__all__ = [
    "CaseSampler",
    "run_check",
    "verify_isometry_sequence",
    "random_cocycle",
    "round_trip_params",
    "verify_automorphism_sequence",
    "verify_inner_sequence",
    "verify_outer_sequence",
    "SEQUENCES",
    "THEOREMS",
    "DEFAULT_SAMPLES",
    "resolve_sequence",
    "verify_sequences",
]
