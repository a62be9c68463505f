"""Axiom checks for groupoid tables.

`validate` lists every violated axiom; it never raises. Table-shape problems
(wrong lengths, ids out of range) end the scan early since later checks would
index garbage.
"""

import logging
from typing import List

from ..common.errors import InvalidGroupoidError
from ..common.results import ValidationReport
from .groupoid import FiniteGroupoid

logger = logging.getLogger(__name__)


def _shape_violations(g: FiniteGroupoid) -> List[str]:
    m = g.num_arrows
    violations: List[str] = []
    if m == 0:
        return ["empty groupoid: unit space must be nonempty"]
    if not g.units:
        violations.append("empty unit space")
    for label, table in (("rng", g.rng), ("inv", g.inv)):
        if len(table) != m:
            violations.append(f"{label} table has {len(table)} entries, expected {m}")
    for unit in g.units:
        if not 0 <= unit < m:
            violations.append(f"unit id {unit} out of range")
    for label, table in (("src", g.src), ("rng", g.rng), ("inv", g.inv)):
        for arrow, value in enumerate(table):
            if not 0 <= value < m:
                violations.append(f"{label} of {arrow} is {value}, out of range")
    for (a, b), c in sorted(g.comp_table.items()):
        if not (0 <= a < m and 0 <= b < m and 0 <= c < m):
            violations.append(f"composition entry ({a},{b})->{c} out of range")
    return violations


def validate(g: FiniteGroupoid) -> ValidationReport:
    """Scan every groupoid axiom and report the violations."""
    violations = _shape_violations(g)
    if violations:
        return _report(g, violations)

    comp = g.comp_table.get
    units = g.unit_set

    for u in g.units:
        if g.src[u] != u or g.rng[u] != u:
            violations.append(f"unit {u} is not its own source and range")
        if g.inv[u] != u:
            violations.append(f"unit {u} is not self-inverse")

    for a in g.arrows:
        if g.src[a] not in units:
            violations.append(f"source of {a} is not a unit")
        if g.rng[a] not in units:
            violations.append(f"range of {a} is not a unit")
    if violations:
        return _report(g, violations)

    for a in g.arrows:
        for b in g.arrows:
            composable = g.src[a] == g.rng[b]
            defined = (a, b) in g.comp_table
            if composable and not defined:
                violations.append(f"composition undefined at ({a},{b})")
            elif defined and not composable:
                violations.append(f"composition defined at non-composable ({a},{b})")

    for a in g.arrows:
        if comp((a, g.src[a])) != a:
            violations.append(f"right identity at {a}")
        if comp((g.rng[a], a)) != a:
            violations.append(f"left identity at {a}")

    for (a, b), c in sorted(g.comp_table.items()):
        if g.src[a] != g.rng[b]:
            continue
        if g.src[c] != g.src[b]:
            violations.append(f"source of composite ({a},{b})")
        if g.rng[c] != g.rng[a]:
            violations.append(f"range of composite ({a},{b})")

    for a in g.arrows:
        inverse = g.inv[a]
        if comp((inverse, a)) != g.src[a] or comp((a, inverse)) != g.rng[a]:
            violations.append(f"inverse law at {a}")
        if g.inv[inverse] != a:
            violations.append(f"inverse involution at {a}")

    for a, b in g.composable_pairs():
        ab = comp((a, b))
        if ab is None:
            continue
        for c in g.arrows_to.get(g.src[b], ()):
            bc = comp((b, c))
            if bc is None:
                continue
            left, right = comp((ab, c)), comp((a, bc))
            if left != right:
                violations.append(f"associativity fails at ({a},{b},{c})")

    return _report(g, violations)


def _report(g: FiniteGroupoid, violations: List[str]) -> ValidationReport:
    if violations:
        logger.info(f"Validation of {g.describe()} found {len(violations)} violations")
        return ValidationReport.error_result(
            f"{len(violations)} axiom violations",
            error_details=violations[0],
            violations=violations,
        )
    return ValidationReport.success_result(f"{g.describe()} is a valid groupoid")


def require_valid(g: FiniteGroupoid) -> FiniteGroupoid:
    """Return `g` unchanged, or raise InvalidGroupoidError listing the violations."""
    report = validate(g)
    if not report.valid:
        raise InvalidGroupoidError(
            f"invalid groupoid: {report.violations[0]}", violations=report.violations
        )
    return g
