"""Sampling and check plumbing shared by the sequence verifiers.

A run is exhaustive when the case count fits the exhaustive limit and draws
`samples` cases with a seeded numpy generator otherwise, so every report is
reproducible for a fixed seed.
"""

import logging
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from ..bisections.bisection import Bisection
from ..bisections.full_group import FullGroup
from ..common.errors import GroupoidError
from ..common.results import CheckResult
from ..common.settings import get_settings
from ..convolution.circle import CircleFunction, CircleScalar
from ..convolution.lamperti import LampertiElement

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Phase denominators kept small so products stay in low-order cyclotomic fields.
PHASE_DENOMINATORS = (1, 2, 3, 4, 6, 8, 12)


class CaseSampler:
    """Seeded source of test cases for one verification run."""

    def __init__(self, samples: int, seed: int, exhaustive_limit: Optional[int] = None):
        self.samples = samples
        self.seed = seed
        self.exhaustive_limit = get_settings().exhaustive_limit if exhaustive_limit is None else exhaustive_limit
        self.rng = np.random.default_rng(seed)

    def cases(self, items: Sequence[T]) -> List[T]:
        if len(items) <= self.exhaustive_limit:
            return list(items)
        picks = self.rng.integers(0, len(items), size=self.samples)
        return [items[int(i)] for i in picks]

    def pairs(self, items: Sequence[T]) -> List[Tuple[T, T]]:
        if len(items) ** 2 <= self.exhaustive_limit:
            return [(a, b) for a in items for b in items]
        picks = self.rng.integers(0, len(items), size=(self.samples, 2))
        return [(items[int(i)], items[int(j)]) for i, j in picks]

    def angle(self) -> Fraction:
        q = PHASE_DENOMINATORS[int(self.rng.integers(0, len(PHASE_DENOMINATORS)))]
        return Fraction(int(self.rng.integers(0, q)), q)

    def circle_function(self, units: Iterable[int]) -> CircleFunction:
        return CircleFunction({u: CircleScalar(self.angle()) for u in sorted(units)})

    def lamperti(self, group: FullGroup) -> LampertiElement:
        b = group[int(self.rng.integers(0, len(group)))]
        return LampertiElement(self.circle_function(b.rng_set), b)

    def lamperti_elements(self, group: FullGroup, count: Optional[int] = None) -> List[LampertiElement]:
        return [self.lamperti(group) for _ in range(self.samples if count is None else count)]


def run_check(check_id: str, cases: Iterable[T], failure: Callable[[T], Optional[str]]) -> CheckResult:
    """Apply `failure` to each case; the first non-None return is the witness.

    A GroupoidError raised by a case counts as a failure witnessed by its message.
    """
    count = 0
    for case in cases:
        count += 1
        try:
            witness = failure(case)
        except GroupoidError as exc:
            witness = f"{type(exc).__name__}: {exc}"
        if witness is not None:
            logger.error(f"Check {check_id} failed: {witness}")
            return CheckResult(check_id=check_id, passed=False, witness=_one_line(witness), cases=count)
    logger.debug(f"Check {check_id} passed on {count} cases")
    return CheckResult(check_id=check_id, passed=True, cases=count)


def _one_line(text: str) -> str:
    return " ".join(text.split()).replace(" ", "_")


def arrows_text(b: Bisection) -> str:
    return "[" + ",".join(str(x) for x in b.arrows) + "]"
