"""Result structures for diagnostics and command output.

Operations that report rather than fail (validation, cocycle checks, isometry
certificates, sequence verification) return these pydantic models. The CLI
serialises the same models for `--json`.
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class ResultBase(BaseModel):
    """Common fields of every diagnostic result."""

    success: bool
    message: str
    data: Dict[str, Any] = Field(default_factory=dict)
    error_details: Optional[str] = None

    @classmethod
    def success_result(cls, message: str, data: Optional[Dict[str, Any]] = None, **fields: Any):
        return cls(success=True, message=message, data=data or {}, **fields)

    @classmethod
    def error_result(cls, message: str, error_details: Optional[str] = None, **fields: Any):
        return cls(success=False, message=message, error_details=error_details, **fields)


class ValidationReport(ResultBase):
    """Every violated groupoid axiom, in scan order."""

    violations: List[str] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


class CocycleCheck(ResultBase):
    """Outcome of a multiplicativity scan; `pair` is the first violating pair."""

    pair: Optional[Tuple[int, int]] = None


class IsometryCertificate(ResultBase):
    """Certificate for (or refutation of) invertible isometry at one p.

    `status` is "certified", "refuted" or "inconclusive".
    """

    status: str = "inconclusive"
    p: float = 2.0
    norm_lower: float = 0.0
    norm_upper: float = 0.0
    inverse_norm_lower: Optional[float] = None
    inverse_norm_upper: Optional[float] = None
    witness: Optional[List[Tuple[float, float]]] = None
    witness_direction: Optional[str] = None


class CheckResult(BaseModel):
    """One property check of a sequence verification run."""

    check_id: str
    passed: bool
    witness: str = "-"
    cases: int = 0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


class SequenceReport(ResultBase):
    """All checks of one sequence, sorted by check id."""

    sequence: str
    checks: List[CheckResult] = Field(default_factory=list)

    @classmethod
    def from_checks(cls, sequence: str, checks: List[CheckResult]) -> "SequenceReport":
        ordered = sorted(checks, key=lambda check: check.check_id)
        failed = [check.check_id for check in ordered if not check.passed]
        if failed:
            return cls.error_result(
                f"{len(failed)} of {len(ordered)} checks failed",
                error_details=", ".join(failed),
                sequence=sequence,
                checks=ordered,
            )
        return cls.success_result(f"all {len(ordered)} checks passed", sequence=sequence, checks=ordered)


class CommandResult(BaseModel):
    """Ordered KEY=VALUE report of one CLI command."""

    command: str
    exit_code: int = 0
    entries: List[Tuple[str, str]] = Field(default_factory=list)

    def add(self, key: str, value: Any) -> None:
        self.entries.append((key, str(value)))

    def lines(self) -> List[str]:
        return [f"{key}={value}" for key, value in self.entries]
