"""Enumeration of the topological full group F(G) and the image of rho."""

import logging
from typing import Dict, Iterator, List, Optional, Set, Tuple

from ..common.errors import SizeLimitError
from ..common.settings import get_settings
from ..core.groupoid import FiniteGroupoid
from .bisection import FullBisection, inverse, multiply, rho, unit_bisection

logger = logging.getLogger(__name__)


class FullGroup:
    """The full bisections of a groupoid, sorted, with their group law."""

    def __init__(self, groupoid: FiniteGroupoid, elements: List[FullBisection]):
        self.groupoid = groupoid
        self.elements = sorted(elements)
        self.identity = unit_bisection(groupoid)
        self._index = {element.arrows: i for i, element in enumerate(self.elements)}
        logger.info(f"Full group of {groupoid.describe()} initialized with {len(self.elements)} elements")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[FullBisection]:
        return iter(self.elements)

    def __getitem__(self, index: int) -> FullBisection:
        return self.elements[index]

    def __contains__(self, element: object) -> bool:
        return getattr(element, "arrows", None) in self._index

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, element: FullBisection) -> int:
        return self._index[element.arrows]

    def multiply(self, a: FullBisection, b: FullBisection) -> FullBisection:
        return multiply(a, b).as_full()

    def inverse(self, a: FullBisection) -> FullBisection:
        return inverse(a).as_full()


def _matchings(g: FiniteGroupoid, limit: int) -> Iterator[Tuple[int, ...]]:
    """Perfect matchings of the unit x unit bipartite graph with one edge per arrow."""
    units = g.units
    count = 0

    def extend(position: int, chosen: List[int], used: Set[int]) -> Iterator[Tuple[int, ...]]:
        nonlocal count
        if position == len(units):
            count += 1
            if count > limit:
                raise SizeLimitError(f"full group exceeds the limit of {limit} elements", limit=limit)
            yield tuple(chosen)
            return
        for x in g.arrows_from[units[position]]:
            target = g.rng[x]
            if target in used:
                continue
            chosen.append(x)
            used.add(target)
            yield from extend(position + 1, chosen, used)
            chosen.pop()
            used.discard(target)

    yield from extend(0, [], set())


def full_group(g: FiniteGroupoid, limit: Optional[int] = None) -> FullGroup:
    """Every full bisection of `g`; raises SizeLimitError past `limit`."""
    cap = limit if limit is not None else get_settings().full_group_limit
    elements = [FullBisection(g, tuple(sorted(arrows))) for arrows in _matchings(g, cap)]
    return FullGroup(g, elements)


def _perm_key(g: FiniteGroupoid, perm: Dict[int, int]) -> Tuple[int, ...]:
    return tuple(perm[u] for u in g.units)


def rho_image(group: FullGroup) -> List[Tuple[int, ...]]:
    """Distinct unit permutations rho_B, each as images of the units in id order."""
    g = group.groupoid
    return sorted({_perm_key(g, rho(element)) for element in group})


def rho_kernel(group: FullGroup) -> List[FullBisection]:
    """Full bisections acting trivially on the unit space."""
    return [element for element in group if all(u == v for u, v in rho(element).items())]
