"""The finite groupoid table model.

Arrows are the integers 0..m-1. Units are a designated subset of arrows; a unit
is its own identity arrow. Composition follows function order: comp(a, b) is
defined exactly when src(a) == rng(b), and then src(ab) = src(b), rng(ab) = rng(a).
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    """Immutable composition tables of a finite (discrete) groupoid.

    Construction never validates; call `core.validate` or `core.require_valid`.
    Two groupoids compare equal when their tables are identical.
    """

    units: Tuple[int, ...]
    src: Tuple[int, ...]
    rng: Tuple[int, ...]
    inv: Tuple[int, ...]
    comp_table: Mapping[Tuple[int, int], int] = field(repr=False)
    name: str = field(default="", compare=False)

    @classmethod
    def from_tables(
        cls,
        units: Iterable[int],
        src: Sequence[int],
        rng: Sequence[int],
        inv: Sequence[int],
        comp: Mapping[Tuple[int, int], int],
        name: str = "",
    ) -> "FiniteGroupoid":
        return cls(
            units=tuple(sorted(set(int(u) for u in units))),
            src=tuple(int(s) for s in src),
            rng=tuple(int(r) for r in rng),
            inv=tuple(int(i) for i in inv),
            comp_table={(int(a), int(b)): int(c) for (a, b), c in comp.items()},
            name=name,
        )

    @property
    def num_arrows(self) -> int:
        return len(self.src)

    @property
    def arrows(self) -> range:
        return range(len(self.src))

    @cached_property
    def unit_set(self) -> frozenset:
        return frozenset(self.units)

    def is_unit(self, arrow: int) -> bool:
        return arrow in self.unit_set

    def comp(self, a: int, b: int) -> Optional[int]:
        """The composite ab, or None when src(a) != rng(b)."""
        return self.comp_table.get((a, b))

    def compose(self, *arrows: int) -> int:
        """Compose a chain left to right as written; raises KeyError when undefined."""
        result = arrows[0]
        for arrow in arrows[1:]:
            result = self.comp_table[(result, arrow)]
        return result

    @cached_property
    def fingerprint(self) -> Tuple:
        return (self.units, self.src, self.rng, self.inv, tuple(sorted(self.comp_table.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return self is other or self.fingerprint == other.fingerprint

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    @cached_property
    def arrows_from(self) -> Dict[int, Tuple[int, ...]]:
        """Source fibers: unit -> arrows x with src(x) = unit."""
        fibers: Dict[int, List[int]] = {u: [] for u in self.units}
        for x in self.arrows:
            fibers.setdefault(self.src[x], []).append(x)
        return {u: tuple(xs) for u, xs in fibers.items()}

    @cached_property
    def arrows_to(self) -> Dict[int, Tuple[int, ...]]:
        """Range fibers: unit -> arrows x with rng(x) = unit."""
        fibers: Dict[int, List[int]] = {u: [] for u in self.units}
        for x in self.arrows:
            fibers.setdefault(self.rng[x], []).append(x)
        return {u: tuple(xs) for u, xs in fibers.items()}

    def hom(self, source: int, target: int) -> Tuple[int, ...]:
        """Arrows from `source` to `target`, in increasing id order."""
        return tuple(x for x in self.arrows_from.get(source, ()) if self.rng[x] == target)

    def composable_pairs(self) -> Iterator[Tuple[int, int]]:
        """All (a, b) with src(a) == rng(b), ordered by (a, b)."""
        for a in self.arrows:
            for b in self.arrows_to.get(self.src[a], ()):
                yield a, b

    @cached_property
    def factorizations(self) -> Dict[int, Tuple[Tuple[int, int], ...]]:
        """x -> every pair (y, z) with comp(y, z) = x."""
        table: Dict[int, List[Tuple[int, int]]] = {x: [] for x in self.arrows}
        for (y, z), x in sorted(self.comp_table.items()):
            table.setdefault(x, []).append((y, z))
        return {x: tuple(pairs) for x, pairs in table.items()}

    def describe(self) -> str:
        label = self.name or "groupoid"
        return f"{label} ({self.num_arrows} arrows, {len(self.units)} units)"
