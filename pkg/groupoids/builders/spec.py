"""Builder expression trees.

Each node renders back to the canonical text form accepted by `parse_spec`
and builds the groupoid it describes.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from ..core.groupoid import FiniteGroupoid
from .constructions import (
    FiniteGroup,
    action_groupoid,
    cyclic_group,
    explicit_groupoid,
    group_groupoid,
    pair_groupoid,
    product_groupoid,
    symmetric_group,
    table_group,
    union_groupoid,
)


def _int_list(values) -> str:
    return "[" + ", ".join(str(v) for v in values) + "]"


@dataclass(frozen=True)
class CyclicRef:
    order: int

    def render(self) -> str:
        return f"cyclic {self.order}"

    def group(self) -> FiniteGroup:
        return cyclic_group(self.order)


@dataclass(frozen=True)
class SymRef:
    degree: int

    def render(self) -> str:
        return f"sym {self.degree}"

    def group(self) -> FiniteGroup:
        return symmetric_group(self.degree)


@dataclass(frozen=True)
class TableRef:
    rows: Tuple[Tuple[int, ...], ...]

    def render(self) -> str:
        return "table [" + ", ".join(_int_list(row) for row in self.rows) + "]"

    def group(self) -> FiniteGroup:
        return table_group(self.rows)


GroupRef = Union[CyclicRef, SymRef, TableRef]


@dataclass(frozen=True)
class PairSpec:
    points: int

    def render(self) -> str:
        return f"pair({self.points})"

    def build(self) -> FiniteGroupoid:
        return pair_groupoid(self.points)


@dataclass(frozen=True)
class GroupSpec:
    group: GroupRef

    def render(self) -> str:
        return f"group({self.group.render()})"

    def build(self) -> FiniteGroupoid:
        return group_groupoid(self.group.group())


@dataclass(frozen=True)
class ActionSpec:
    """perms[k] is the permutation of 0..points-1 by which the k-th generator acts."""

    group: GroupRef
    points: int
    perms: Tuple[Tuple[int, ...], ...]

    def render(self) -> str:
        perms = "[" + ", ".join(_int_list(p) for p in self.perms) + "]"
        return f"action({self.group.render()}, {self.points}, {perms})"

    def build(self) -> FiniteGroupoid:
        return action_groupoid(self.group.group(), self.points, self.perms)


@dataclass(frozen=True)
class UnionSpec:
    left: "GroupoidSpec"
    right: "GroupoidSpec"

    def render(self) -> str:
        return f"union({self.left.render()}, {self.right.render()})"

    def build(self) -> FiniteGroupoid:
        return union_groupoid(self.left.build(), self.right.build())


@dataclass(frozen=True)
class ProductSpec:
    left: "GroupoidSpec"
    right: "GroupoidSpec"

    def render(self) -> str:
        return f"product({self.left.render()}, {self.right.render()})"

    def build(self) -> FiniteGroupoid:
        return product_groupoid(self.left.build(), self.right.build())


@dataclass(frozen=True)
class ExplicitSpec:
    units: Tuple[int, ...]
    src: Tuple[int, ...]
    rng: Tuple[int, ...]
    inv: Tuple[int, ...]
    comp: Tuple[Tuple[int, int, int], ...]

    def render(self) -> str:
        comp = "[" + ", ".join(_int_list(t) for t in self.comp) + "]"
        fields: List[str] = [
            f"units: {_int_list(self.units)}",
            f"arrows: {len(self.src)}",
            f"src: {_int_list(self.src)}",
            f"rng: {_int_list(self.rng)}",
            f"inv: {_int_list(self.inv)}",
            f"comp: {comp}",
        ]
        return "explicit{" + "; ".join(fields) + "}"

    def build(self) -> FiniteGroupoid:
        return explicit_groupoid(self.units, self.src, self.rng, self.inv, self.comp)


GroupoidSpec = Union[PairSpec, GroupSpec, ActionSpec, UnionSpec, ProductSpec, ExplicitSpec]


def build(spec: GroupoidSpec) -> FiniteGroupoid:
    """Build the groupoid; every construction except `explicit` is validated."""
    return spec.build()
