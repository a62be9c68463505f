"""Exception hierarchy for groupoid computations.

Every failure raised by the library derives from GroupoidError so callers
(the CLI in particular) can catch one type and report the class name.
Diagnostics that are not failures are returned as result models instead.
"""

from typing import Any, List, Optional, Tuple


class GroupoidError(Exception):
    """Base class for all groupoid library errors."""


class InvalidGroupoidError(GroupoidError):
    """Tables do not satisfy the groupoid axioms."""

    def __init__(self, message: str, violations: Optional[List[str]] = None):
        super().__init__(message)
        self.violations = violations or []


class MismatchedGroupoidError(GroupoidError):
    """Operands live over different groupoids."""


class NotABisectionError(GroupoidError):
    """An arrow set where source or range fails to be injective."""

    def __init__(self, message: str, arrows: Tuple[int, ...] = ()):
        super().__init__(message)
        self.arrows = arrows


class NotFullBisectionError(GroupoidError):
    """A bisection (or support) that does not cover every unit."""

    def __init__(self, message: str, arrows: Tuple[int, ...] = ()):
        super().__init__(message)
        self.arrows = arrows


class NotCircleValuedError(GroupoidError):
    """A coefficient off the unit circle."""

    def __init__(self, message: str, arrow: int, value: Any = None):
        super().__init__(message)
        self.arrow = arrow
        self.value = value


class SizeLimitError(GroupoidError):
    """An enumeration exceeded its configured cap."""

    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit


class NotInvertibleError(GroupoidError):
    """No two-sided inverse exists in C_c(G)."""


class ConverseRequiresPNot2Error(GroupoidError):
    """Refuting isometry of a non-spatial element is meaningless at p = 2."""


class InvalidNormParameterError(GroupoidError):
    """p outside [1, inf]."""


class NotACocycleError(GroupoidError):
    """An arrow function that is not multiplicative."""

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.pair = pair


class PartialFunctionError(GroupoidError):
    """A unit-space function that is not defined on every unit."""

    def __init__(self, message: str, missing: Tuple[int, ...] = ()):
        super().__init__(message)
        self.missing = missing


class DiagonalNotPreservedError(GroupoidError):
    """A linear map sends a unit indicator off the diagonal."""

    def __init__(self, message: str, unit: int):
        super().__init__(message)
        self.unit = unit


class NotSpatialError(GroupoidError):
    """The image of an indicator is not a Lamperti element."""

    def __init__(self, message: str, bisection: Tuple[int, ...] = ()):
        super().__init__(message)
        self.bisection = bisection


class NotWellDefinedError(GroupoidError):
    """Two bisections through one arrow produced different images."""

    def __init__(self, message: str, arrow: int, images: Tuple[int, int]):
        super().__init__(message)
        self.arrow = arrow
        self.images = images


class NotAutomorphismError(GroupoidError):
    """A map fails to be a groupoid or algebra automorphism."""

    def __init__(self, message: str, arrow: Optional[int] = None):
        super().__init__(message)
        self.arrow = arrow


class EffectivenessRequiredError(GroupoidError):
    """The operation needs an effective groupoid."""

    def __init__(self, message: str, arrow: Optional[int] = None):
        super().__init__(message)
        self.arrow = arrow


class SpecParseError(GroupoidError):
    """Malformed groupoid spec or element expression."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownIdError(GroupoidError):
    """An arrow or unit id that does not exist in the groupoid."""

    def __init__(self, message: str, ident: Any = None):
        super().__init__(message)
        self.ident = ident
