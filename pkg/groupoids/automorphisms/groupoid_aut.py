"""Groupoid automorphisms, their enumeration and conjugation by full bisections.

Aut(G) is computed as the automorphism group of a labelled digraph: one node per
arrow (kind "unit" or "arrow"), one node per composable pair (kind "comp") with
edges to its left factor, right factor and composite, plus src/rng edges
between arrow nodes. Label-preserving digraph automorphisms are exactly the
arrow permutations preserving units, src, rng and composition.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from ..bisections.bisection import Bisection, UnitPermutation
from ..common.errors import NotAutomorphismError, NotFullBisectionError, SizeLimitError
from ..common.settings import get_settings
from ..core.groupoid import FiniteGroupoid

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GroupoidAut:
    """An arrow permutation preserving the groupoid structure; images[x] = theta(x)."""

    groupoid: FiniteGroupoid
    images: Tuple[int, ...]

    @classmethod
    def identity(cls, g: FiniteGroupoid) -> "GroupoidAut":
        return cls(g, tuple(g.arrows))

    @classmethod
    def checked(cls, g: FiniteGroupoid, images: Sequence[int]) -> "GroupoidAut":
        failure = automorphism_failure(g, images)
        if failure is not None:
            raise NotAutomorphismError(f"arrow map fails to be an automorphism at arrow {failure}", arrow=failure)
        return cls(g, tuple(images))

    def __call__(self, arrow: int) -> int:
        return self.images[arrow]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupoidAut):
            return NotImplemented
        return self.images == other.images and self.groupoid == other.groupoid

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "GroupoidAut") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"GroupoidAut({list(self.images)})"

    def __mul__(self, other: "GroupoidAut") -> "GroupoidAut":
        """self o other: apply `other` first."""
        return GroupoidAut(self.groupoid, tuple(self.images[other.images[x]] for x in self.groupoid.arrows))

    def inverse(self) -> "GroupoidAut":
        inverse = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inverse[y] = x
        return GroupoidAut(self.groupoid, tuple(inverse))

    @property
    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def on_units(self) -> UnitPermutation:
        return {u: self.images[u] for u in self.groupoid.units}

    def apply_bisection(self, b: Bisection) -> Bisection:
        return Bisection.of(self.groupoid, (self.images[x] for x in b.arrows))

    def as_mapping(self) -> Dict[int, int]:
        return dict(enumerate(self.images))


def automorphism_failure(g: FiniteGroupoid, images: Sequence[int]) -> Optional[int]:
    """First arrow where `images` breaks bijectivity or structure, else None."""
    m = g.num_arrows
    seen = set()
    for x, y in enumerate(images):
        if not 0 <= y < m or y in seen:
            return x
        seen.add(y)
    if len(images) != m:
        return min(len(images), m - 1)
    for x in g.arrows:
        y = images[x]
        if g.is_unit(x) != g.is_unit(y):
            return x
        if images[g.src[x]] != g.src[y] or images[g.rng[x]] != g.rng[y]:
            return x
        if images[g.inv[x]] != g.inv[y]:
            return x
    for (a, b), c in sorted(g.comp_table.items()):
        if g.comp(images[a], images[b]) != images[c]:
            return a
    return None


def structure_graph(g: FiniteGroupoid) -> nx.DiGraph:
    graph = nx.DiGraph()
    roles: Dict[Tuple, List[str]] = {}

    def connect(tail, head, role: str) -> None:
        roles.setdefault((tail, head), []).append(role)

    for x in g.arrows:
        graph.add_node(("arrow", x), kind="unit" if g.is_unit(x) else "arrow")
        connect(("arrow", x), ("arrow", g.src[x]), "src")
        connect(("arrow", x), ("arrow", g.rng[x]), "rng")
    for (a, b), c in g.comp_table.items():
        node = ("comp", a, b)
        graph.add_node(node, kind="comp")
        connect(node, ("arrow", a), "left")
        connect(node, ("arrow", b), "right")
        connect(node, ("arrow", c), "result")
    for (tail, head), labels in roles.items():
        graph.add_edge(tail, head, roles=tuple(sorted(labels)))
    return graph


def _matcher(first: nx.DiGraph, second: nx.DiGraph) -> isomorphism.DiGraphMatcher:
    return isomorphism.DiGraphMatcher(
        first,
        second,
        node_match=isomorphism.categorical_node_match("kind", None),
        edge_match=isomorphism.categorical_edge_match("roles", None),
    )


def aut_group(g: FiniteGroupoid, limit: Optional[int] = None) -> List[GroupoidAut]:
    """Every automorphism of `g`, sorted by image tuple."""
    cap = limit if limit is not None else get_settings().aut_limit
    graph = structure_graph(g)
    found: List[GroupoidAut] = []
    for mapping in _matcher(graph, graph).isomorphisms_iter():
        if len(found) >= cap:
            raise SizeLimitError(f"automorphism group exceeds the limit of {cap} elements", limit=cap)
        images = tuple(mapping[("arrow", x)][1] for x in g.arrows)
        found.append(GroupoidAut(g, images))
    found.sort()
    logger.info(f"Aut({g.describe()}) has order {len(found)}")
    return found


def are_isomorphic(g: FiniteGroupoid, h: FiniteGroupoid) -> bool:
    if g.num_arrows != h.num_arrows or len(g.units) != len(h.units):
        return False
    return _matcher(structure_graph(g), structure_graph(h)).is_isomorphic()


def ad_bisection(b: Bisection) -> GroupoidAut:
    """x -> B^-1 x B, the automorphism that conjugation by 1_B induces."""
    if not b.is_full:
        raise NotFullBisectionError(f"conjugation needs a full bisection, got {list(b.arrows)}", arrows=b.arrows)
    g = b.groupoid
    by_range = b.by_range
    return GroupoidAut(
        g, tuple(g.compose(g.inv[by_range[g.rng[x]]], x, by_range[g.src[x]]) for x in g.arrows)
    )


def ad_bisection_left(b: Bisection) -> GroupoidAut:
    """x -> B x B^-1."""
    if not b.is_full:
        raise NotFullBisectionError(f"conjugation needs a full bisection, got {list(b.arrows)}", arrows=b.arrows)
    g = b.groupoid
    by_source = b.by_source
    return GroupoidAut(
        g, tuple(g.compose(by_source[g.rng[x]], x, g.inv[by_source[g.src[x]]]) for x in g.arrows)
    )
