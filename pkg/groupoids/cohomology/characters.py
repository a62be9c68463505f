"""Characters of finite isotropy groups and their invariant factors.

A group is given by its element list, identity and composition table.
Hom(H, Q/Z) is isomorphic to the abelianization of H; its invariant factors
come from the Smith normal form of the relations e_g + e_h - e_gh.
"""

import logging
from collections import deque
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

import sympy
from sympy.matrices.normalforms import smith_normal_form

logger = logging.getLogger(__name__)

GroupTable = Mapping[Tuple[int, int], int]
Character = Dict[int, Fraction]


def generated_subgroup(generators: Sequence[int], identity: int, table: GroupTable) -> List[int]:
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for s in generators:
            nxt = table[(current, s)]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen)


def greedy_generators(elements: Sequence[int], identity: int, table: GroupTable) -> List[int]:
    """Scan elements in order, keeping each one outside the subgroup so far."""
    generators: List[int] = []
    span = {identity}
    for element in elements:
        if element in span:
            continue
        generators.append(element)
        span = set(generated_subgroup(generators, identity, table))
        if len(span) == len(elements):
            break
    return generators


def element_order(element: int, identity: int, table: GroupTable) -> int:
    order, current = 1, element
    while current != identity:
        current = table[(current, element)]
        order += 1
    return order


def _extend(assignment: Dict[int, Fraction], identity: int, table: GroupTable):
    """Propagate generator angles along the Cayley graph; None if inconsistent."""
    values = {identity: Fraction(0)}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for s, angle in assignment.items():
            nxt = table[(current, s)]
            value = (values[current] + angle) % 1
            if nxt not in values:
                values[nxt] = value
                queue.append(nxt)
            elif values[nxt] != value:
                return None
    return values


def enumerate_characters(elements: Sequence[int], identity: int, table: GroupTable) -> List[Character]:
    """Every homomorphism H -> Q/Z, each as element -> angle in [0, 1)."""
    generators = greedy_generators(elements, identity, table)
    orders = [element_order(s, identity, table) for s in generators]
    characters: List[Character] = []

    def assign(position: int, chosen: Dict[int, Fraction]) -> None:
        if position == len(generators):
            values = _extend(chosen, identity, table)
            if values is None:
                return
            if all(values[table[(a, b)]] == (values[a] + values[b]) % 1 for a in elements for b in elements):
                characters.append(values)
            return
        s = generators[position]
        for k in range(orders[position]):
            chosen[s] = Fraction(k, orders[position])
            assign(position + 1, chosen)
        chosen.pop(s, None)

    assign(0, {})
    characters.sort(key=lambda chi: tuple(chi[e] for e in elements))
    return characters


def invariant_factors_of_relations(rows: List[List[int]], columns: int) -> List[int]:
    """Invariant factors (> 1) of Z^columns / row span; free rank appears as 0."""
    if not rows or columns == 0:
        return [0] * columns
    matrix = sympy.Matrix(rows)
    normal = smith_normal_form(matrix, domain=sympy.ZZ)
    diagonal = [abs(int(normal[i, i])) for i in range(min(normal.shape))]
    factors = [d for d in diagonal if d != 1]
    factors += [0] * (columns - len(diagonal))
    return sorted(factors, key=lambda d: (d == 0, d))


def abelianization_factors(elements: Sequence[int], table: GroupTable) -> List[int]:
    """Invariant factors of H^ab, which is isomorphic to Hom(H, Q/Z)."""
    index = {e: i for i, e in enumerate(elements)}
    rows = []
    for a in elements:
        for b in elements:
            row = [0] * len(elements)
            row[index[a]] += 1
            row[index[b]] += 1
            row[index[table[(a, b)]]] -= 1
            if any(row):
                rows.append(row)
    factors = [d for d in invariant_factors_of_relations(rows, len(elements)) if d != 0]
    logger.debug(f"Abelianization of a group of order {len(elements)}: {factors}")
    return factors


def canonical_factors(factors: Sequence[int]) -> List[int]:
    """Invariant factors of a direct sum of cyclic groups Z/d."""
    cyclic = [d for d in factors if d > 1]
    if not cyclic:
        return []
    diagonal = [[d if i == j else 0 for j in range(len(cyclic))] for i, d in enumerate(cyclic)]
    return invariant_factors_of_relations(diagonal, len(cyclic))


def format_factors(factors: Sequence[int]) -> str:
    return " x ".join(f"Z/{d}" for d in factors) if factors else "0"
