"""Common building blocks shared by every groupoid subpackage.

Errors, runtime settings and the pydantic result models used to report
diagnostics consistently.
"""

from .errors import (
    GroupoidError,
    InvalidGroupoidError,
    MismatchedGroupoidError,
    NotABisectionError,
    NotFullBisectionError,
    NotCircleValuedError,
    SizeLimitError,
    NotInvertibleError,
    ConverseRequiresPNot2Error,
    InvalidNormParameterError,
    NotACocycleError,
    PartialFunctionError,
    DiagonalNotPreservedError,
    NotSpatialError,
    NotWellDefinedError,
    NotAutomorphismError,
    EffectivenessRequiredError,
    SpecParseError,
    UnknownIdError,
)
from .settings import GroupoidSettings, get_settings, reset_settings
from .results import (
    CheckResult,
    ValidationReport,
    CocycleCheck,
    IsometryCertificate,
    SequenceReport,
    CommandResult,
)

__all__ = [
    "GroupoidError",
    "InvalidGroupoidError",
    "MismatchedGroupoidError",
    "NotABisectionError",
    "NotFullBisectionError",
    "NotCircleValuedError",
    "SizeLimitError",
    "NotInvertibleError",
    "ConverseRequiresPNot2Error",
    "InvalidNormParameterError",
    "NotACocycleError",
    "PartialFunctionError",
    "DiagonalNotPreservedError",
    "NotSpatialError",
    "NotWellDefinedError",
    "NotAutomorphismError",
    "EffectivenessRequiredError",
    "SpecParseError",
    "UnknownIdError",
    "GroupoidSettings",
    "get_settings",
    "reset_settings",
    "CheckResult",
    "ValidationReport",
    "CocycleCheck",
    "IsometryCertificate",
    "SequenceReport",
    "CommandResult",
]
