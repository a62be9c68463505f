"""Finite groupoid tables and their basic structure.

Exposes the table model, axiom validation, orbit decomposition,
effectiveness and isotropy summaries.
"""

from .groupoid import FiniteGroupoid
from .validation import validate, require_valid
from .structure import (
    orbits,
    is_effective,
    non_unit_isotropy,
    isotropy_arrows,
    isotropy_summary,
    IsotropySummary,
    OrbitIsotropy,
)

__all__ = [
    "FiniteGroupoid",
    "validate",
    "require_valid",
    "orbits",
    "is_effective",
    "non_unit_isotropy",
    "isotropy_arrows",
    "isotropy_summary",
    "IsotropySummary",
    "OrbitIsotropy",
]
