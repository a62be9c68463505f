"""Groupoid constructions with canonical arrow numbering.

Numbering (part of the file-format contract):
- pair(n): arrow (i, j) has id i*n + j, with rng i and src j.
- group(G): arrow g is element g; the identity element is the single unit.
- action(G, N, ...): arrow (x, g) has id x*|G| + g, src x, rng g.x.
- union(S, T): arrows of S, then arrows of T shifted by |S|.
- product(S, T): arrow (a, b) has id a*|T| + b.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..cohomology.characters import greedy_generators
from ..common.errors import InvalidGroupoidError
from ..core.groupoid import FiniteGroupoid
from ..core.validation import require_valid

logger = logging.getLogger(__name__)


@dataclass
class FiniteGroup:
    """Elements 0..n-1 with multiplication table[a][b] = ab."""

    name: str
    table: List[List[int]]
    identity: int
    generators: List[int] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.table)

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        for b in range(self.order):
            if self.table[a][b] == self.identity:
                return b
        raise InvalidGroupoidError(f"element {a} of {self.name} has no inverse")

    def pair_table(self) -> Dict[Tuple[int, int], int]:
        return {(a, b): self.table[a][b] for a in range(self.order) for b in range(self.order)}


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidGroupoidError(f"cyclic group order must be positive, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(f"cyclic {n}", table, 0, [1] if n > 1 else [])


def symmetric_group(n: int) -> FiniteGroup:
    """Permutations of range(n) in itertools order; ab applies b first."""
    if n < 1:
        raise InvalidGroupoidError(f"symmetric group degree must be positive, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(a[b[k]] for k in range(n))] for b in perms] for a in perms]
    generators: List[int] = []
    if n > 1:
        transposition = tuple([1, 0] + list(range(2, n)))
        cycle = tuple((k + 1) % n for k in range(n))
        generators = [index[transposition]]
        if index[cycle] not in generators:
            generators.append(index[cycle])
    return FiniteGroup(f"sym {n}", table, 0, generators)


def table_group(rows: Sequence[Sequence[int]]) -> FiniteGroup:
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise InvalidGroupoidError("group table must be square and nonempty")
    table = [[int(v) for v in row] for row in rows]
    if any(not 0 <= v < n for row in table for v in row):
        raise InvalidGroupoidError("group table entries out of range")
    identities = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not identities:
        raise InvalidGroupoidError("group table has no identity element")
    identity = identities[0]
    pairs = {(a, b): table[a][b] for a in range(n) for b in range(n)}
    generators = greedy_generators(list(range(n)), identity, pairs)
    return FiniteGroup("table", table, identity, generators)


def pair_groupoid(n: int) -> FiniteGroupoid:
    if n < 1:
        raise InvalidGroupoidError(f"pair groupoid needs at least one point, got {n}")
    src, rng, inv = [], [], []
    comp: Dict[Tuple[int, int], int] = {}
    for i in range(n):
        for j in range(n):
            rng.append(i)
            src.append(j)
            inv.append(j * n + i)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                comp[(i * n + j, j * n + k)] = i * n + k
    src = [s * n + s for s in src]
    rng = [r * n + r for r in rng]
    units = [i * n + i for i in range(n)]
    return require_valid(FiniteGroupoid.from_tables(units, src, rng, inv, comp, name=f"pair({n})"))


def group_groupoid(group: FiniteGroup) -> FiniteGroupoid:
    n, e = group.order, group.identity
    inv = [group.inverse(a) for a in range(n)]
    g = FiniteGroupoid.from_tables([e], [e] * n, [e] * n, inv, group.pair_table(), name=f"group({group.name})")
    return require_valid(g)


def _action_permutations(group: FiniteGroup, points: int, perms: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Extend generator permutations to every group element along the Cayley graph."""
    if len(perms) != len(group.generators):
        raise InvalidGroupoidError(
            f"action of {group.name} needs {len(group.generators)} generator permutations, got {len(perms)}"
        )
    for perm in perms:
        if sorted(perm) != list(range(points)):
            raise InvalidGroupoidError(f"{list(perm)} is not a permutation of {points} points")
    images: Dict[int, Tuple[int, ...]] = {group.identity: tuple(range(points))}
    queue = [group.identity]
    while queue:
        current = queue.pop(0)
        for s, perm in zip(group.generators, perms):
            nxt = group.multiply(current, s)
            composed = tuple(images[current][perm[x]] for x in range(points))
            if nxt not in images:
                images[nxt] = composed
                queue.append(nxt)
            elif images[nxt] != composed:
                raise InvalidGroupoidError("action not a group action")
    if len(images) != group.order:
        raise InvalidGroupoidError("action not a group action: generators do not reach every element")
    for a in range(group.order):
        for b in range(group.order):
            ab = group.multiply(a, b)
            if images[ab] != tuple(images[a][images[b][x]] for x in range(points)):
                raise InvalidGroupoidError("action not a group action")
    return [images[g] for g in range(group.order)]


def action_groupoid(group: FiniteGroup, points: int, perms: Sequence[Sequence[int]]) -> FiniteGroupoid:
    """X x| G with arrows (x, g): x -> g.x and (g.x, h)(x, g) = (x, hg)."""
    if points < 1:
        raise InvalidGroupoidError(f"action needs at least one point, got {points}")
    acting = _action_permutations(group, points, perms)
    order = group.order

    def arrow(x: int, g: int) -> int:
        return x * order + g

    src, rng, inv = [], [], []
    comp: Dict[Tuple[int, int], int] = {}
    for x in range(points):
        for g in range(order):
            src.append(arrow(x, group.identity))
            rng.append(arrow(acting[g][x], group.identity))
            inv.append(arrow(acting[g][x], group.inverse(g)))
            for h in range(order):
                comp[(arrow(acting[g][x], h), arrow(x, g))] = arrow(x, group.multiply(h, g))
    units = [arrow(x, group.identity) for x in range(points)]
    g = FiniteGroupoid.from_tables(units, src, rng, inv, comp, name=f"action({group.name}, {points})")
    return require_valid(g)


def union_groupoid(left: FiniteGroupoid, right: FiniteGroupoid) -> FiniteGroupoid:
    shift = left.num_arrows
    units = list(left.units) + [u + shift for u in right.units]
    src = list(left.src) + [s + shift for s in right.src]
    rng = list(left.rng) + [r + shift for r in right.rng]
    inv = list(left.inv) + [i + shift for i in right.inv]
    comp = dict(left.comp_table)
    comp.update({(a + shift, b + shift): c + shift for (a, b), c in right.comp_table.items()})
    name = f"union({left.name}, {right.name})"
    return require_valid(FiniteGroupoid.from_tables(units, src, rng, inv, comp, name=name))


def product_groupoid(left: FiniteGroupoid, right: FiniteGroupoid) -> FiniteGroupoid:
    width = right.num_arrows

    def arrow(a: int, b: int) -> int:
        return a * width + b

    pairs = list(itertools.product(left.arrows, right.arrows))
    units = [arrow(u, v) for u in left.units for v in right.units]
    src = [arrow(left.src[a], right.src[b]) for a, b in pairs]
    rng = [arrow(left.rng[a], right.rng[b]) for a, b in pairs]
    inv = [arrow(left.inv[a], right.inv[b]) for a, b in pairs]
    comp = {
        (arrow(a1, b1), arrow(a2, b2)): arrow(c1, c2)
        for (a1, a2), c1 in left.comp_table.items()
        for (b1, b2), c2 in right.comp_table.items()
    }
    name = f"product({left.name}, {right.name})"
    return require_valid(FiniteGroupoid.from_tables(units, src, rng, inv, comp, name=name))


def explicit_groupoid(
    units: Sequence[int],
    src: Sequence[int],
    rng: Sequence[int],
    inv: Sequence[int],
    comp: Sequence[Tuple[int, int, int]],
) -> FiniteGroupoid:
    """User tables taken verbatim; not validated here."""
    return FiniteGroupoid.from_tables(units, src, rng, inv, {(a, b): c for a, b, c in comp}, name="explicit")


