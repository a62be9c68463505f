"""Tests for cocycles, coboundaries and H^1(G, T)."""

import itertools
from fractions import Fraction

import pytest

from groupoids.builders import (
    cyclic_group,
    group_groupoid,
    pair_groupoid,
    symmetric_group,
    table_group,
    union_groupoid,
)
from groupoids.cli.commands import load_groupoid
from groupoids.common.errors import NotACocycleError, PartialFunctionError
from groupoids.cohomology import (
    Cocycle,
    abelianization_factors,
    canonical_factors,
    coboundary,
    coboundary_witness,
    cocycle_group,
    format_factors,
    h1,
    is_cocycle,
    require_cocycle,
)
from groupoids.convolution import CircleFunction


@pytest.fixture
def rotation_character(z4):
    """k -> k/4 on the cyclic group of order 4."""
    return Cocycle(z4, {k: Fraction(k, 4) for k in z4.arrows})


class TestCocycles:
    def test_coboundaries_are_cocycles(self, pair3):
        f = CircleFunction({0: Fraction(1, 3), 4: Fraction(1, 8), 8: Fraction(5, 6)})
        assert is_cocycle(coboundary(pair3, f)).success

    def test_character_is_a_cocycle(self, rotation_character):
        assert require_cocycle(rotation_character) is rotation_character

    def test_broken_multiplicativity_names_a_pair(self, z4):
        xi = Cocycle(z4, {0: 0, 1: Fraction(1, 2), 2: 0, 3: 0})
        check = is_cocycle(xi)
        assert not check.success
        assert check.pair is not None
        with pytest.raises(NotACocycleError):
            require_cocycle(xi)

    def test_partial_values(self, z4):
        with pytest.raises(PartialFunctionError):
            Cocycle(z4, {0: 0})

    def test_group_operations(self, rotation_character, z4):
        squared = rotation_character * rotation_character
        assert squared[1].angle == Fraction(1, 2)
        assert (rotation_character * rotation_character.inverse()).is_trivial()
        assert Cocycle.trivial(z4).is_trivial()


class TestH1:
    @pytest.mark.parametrize(
        "fixture,expected",
        [("pair2", "0"), ("pair3", "0"), ("z3", "Z/3"), ("z4", "Z/4"), ("s3", "Z/2"), ("free_action", "0")],
    )
    def test_known_groups(self, request, fixture, expected):
        assert str(h1(request.getfixturevalue(fixture))) == expected

    def test_torus_rank_counts_free_coordinates(self, pair3, z4):
        assert h1(pair3).torus_rank == 2
        assert h1(z4).torus_rank == 0

    def test_orbit_factors_combine(self):
        g = union_groupoid(group_groupoid(cyclic_group(4)), group_groupoid(cyclic_group(6)))
        description = h1(g)
        assert description.invariant_factors == [2, 12]
        assert description.order == 24

    def test_klein_isotropy(self, specs_dir):
        description = h1(load_groupoid(specs_dir / "klein_pair.gpd"))
        assert str(description) == "Z/2 x Z/2"
        assert description.torus_rank == 1

    def test_coboundary_witness(self, pair3):
        f = CircleFunction({0: Fraction(1, 5), 4: Fraction(2, 3), 8: Fraction(1, 2)})
        xi = coboundary(pair3, f)
        witness = coboundary_witness(pair3, xi)
        assert witness is not None
        assert witness[0].is_one
        assert coboundary(pair3, witness) == xi

    def test_character_is_not_a_coboundary(self, z4, rotation_character):
        assert coboundary_witness(z4, rotation_character) is None
        description = h1(z4)
        assert not description.class_of(rotation_character).is_trivial
        assert description.class_of(Cocycle.trivial(z4)).is_trivial

    def test_generators_are_cocycles(self, pair3, s3):
        for g in (pair3, s3):
            for xi in cocycle_group(g).generators():
                assert is_cocycle(xi).success

    def test_coordinates_determine_the_cocycle(self, pair3):
        group = cocycle_group(pair3)
        xi = coboundary(pair3, CircleFunction({0: 0, 4: Fraction(1, 4), 8: Fraction(1, 3)}))
        assert group.from_coordinates(group.coordinates(xi)) == xi


class TestFactors:
    def test_symmetric_group_abelianizes_to_order_two(self, s3):
        assert abelianization_factors(s3.arrows, s3.comp_table) == [2]

    def test_canonical_factors(self):
        assert canonical_factors([2, 3]) == [6]
        assert canonical_factors([2, 4, 1]) == [2, 4]
        assert format_factors([]) == "0"


KLEIN_TABLE = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]


def integer_cocycles(g, modulus):
    """Every additive map arrows -> Z/modulus, by backtracking over arrow ids."""
    constraints = {}
    for (a, b), c in g.comp_table.items():
        constraints.setdefault(max(a, b, c), []).append((a, b, c))
    found, values = [], [0] * g.num_arrows

    def extend(x):
        if x == g.num_arrows:
            found.append(tuple(values))
            return
        for v in range(modulus):
            values[x] = v
            if all((values[a] + values[b] - values[c]) % modulus == 0 for a, b, c in constraints.get(x, ())):
                extend(x + 1)

    extend(0)
    return found


def integer_coboundaries(g, modulus):
    result = set()
    for choice in itertools.product(range(modulus), repeat=len(g.units)):
        f = dict(zip(g.units, choice))
        result.add(tuple((f[g.rng[x]] - f[g.src[x]]) % modulus for x in g.arrows))
    return result


class TestAgainstEnumeration:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pair_cocycles_are_coboundaries(self, n):
        g = pair_groupoid(n)
        cocycles = integer_cocycles(g, 12)
        assert set(cocycles) == integer_coboundaries(g, 12)
        assert len(cocycles) == 12 ** (n - 1)

    def test_pair_of_four_has_trivial_torsion(self):
        assert h1(pair_groupoid(4)).order == 1

    @pytest.mark.parametrize(
        "group,homs",
        [
            (cyclic_group(2), 2),
            (cyclic_group(3), 3),
            (cyclic_group(4), 4),
            (table_group(KLEIN_TABLE), 4),
            (symmetric_group(3), 2),
        ],
    )
    def test_group_h1_counts_characters(self, group, homs):
        # every exponent here divides 12, so Z/12 sees all characters
        g = group_groupoid(group)
        assert len(integer_cocycles(g, 12)) == homs
        assert h1(g).order == homs

    @pytest.mark.parametrize("fixture", ["pair2", "z3", "free_action"])
    def test_enumerated_cocycles_pass_the_library_check(self, request, fixture):
        g = request.getfixturevalue(fixture)
        for values in integer_cocycles(g, 12):
            assert is_cocycle(Cocycle(g, {x: Fraction(v, 12) for x, v in zip(g.arrows, values)})).success

    @pytest.mark.parametrize("fixture", ["pair2", "pair3", "z4", "free_action"])
    def test_every_twelfth_coboundary_is_a_cocycle(self, request, fixture):
        g = request.getfixturevalue(fixture)
        for choice in itertools.product(range(12), repeat=len(g.units)):
            f = CircleFunction({u: Fraction(k, 12) for u, k in zip(g.units, choice)})
            assert is_cocycle(coboundary(g, f)).success
