"""Tests for bisections, the inverse semigroup operations and F(G)."""

import pytest

from groupoids.bisections import (
    Bisection,
    FullBisection,
    all_bisections,
    conjugate,
    full_group,
    inverse,
    leq,
    maximal_bisection_through,
    multiply,
    rho,
    rho_image,
    rho_kernel,
    unit_bisection,
)
from groupoids.builders import action_groupoid, cyclic_group, pair_groupoid
from groupoids.common.errors import (
    MismatchedGroupoidError,
    NotABisectionError,
    NotFullBisectionError,
    SizeLimitError,
    UnknownIdError,
)


class TestBisection:
    def test_full_bisections_are_recognised(self, pair2):
        assert isinstance(Bisection.of(pair2, [3, 0]), FullBisection)
        assert Bisection.of(pair2, [3, 0]).arrows == (0, 3)
        assert not Bisection.of(pair2, [1]).is_full

    def test_repeated_range_is_rejected(self, pair2):
        with pytest.raises(NotABisectionError):
            Bisection.of(pair2, [0, 1])

    def test_unknown_arrow(self, pair2):
        with pytest.raises(UnknownIdError):
            Bisection.of(pair2, [7])

    def test_full_constructor_requires_cover(self, pair2):
        with pytest.raises(NotFullBisectionError):
            FullBisection.of(pair2, [0])

    def test_swap_squares_to_identity(self, pair2):
        swap = Bisection.of(pair2, [1, 2])
        assert multiply(swap, swap) == unit_bisection(pair2)
        assert inverse(swap) == swap

    def test_partial_product(self, pair2):
        assert multiply(Bisection.of(pair2, [1]), Bisection.of(pair2, [2])).arrows == (0,)
        assert multiply(Bisection.of(pair2, [2]), Bisection.of(pair2, [2])).arrows == ()

    def test_mismatched_groupoids(self, pair2, pair3):
        with pytest.raises(MismatchedGroupoidError):
            multiply(unit_bisection(pair2), unit_bisection(pair3))

    def test_rho_of_swap(self, pair2):
        assert rho(Bisection.of(pair2, [1, 2])) == {0: 3, 3: 0}

    def test_rho_needs_full_bisection(self, pair2):
        with pytest.raises(NotFullBisectionError):
            rho(Bisection.of(pair2, [1]))

    def test_regular_action_generator_is_a_three_cycle(self):
        g = action_groupoid(cyclic_group(3), 3, [[1, 2, 0]])
        assert rho(Bisection.of(g, [1, 4, 7])) == {0: 3, 3: 6, 6: 0}

    def test_order_relation(self, pair2):
        part = Bisection.of(pair2, [1])
        whole = Bisection.of(pair2, [1, 2])
        assert leq(part, whole)
        assert leq(part, part)
        assert not leq(whole, part)

    def test_conjugation(self, pair3):
        swap01 = Bisection.of(pair3, [1, 3, 8])
        swap12 = Bisection.of(pair3, [0, 5, 7])
        conjugated = conjugate(swap01, swap12)
        assert conjugated.is_full
        assert multiply(conjugated, conjugated) == unit_bisection(pair3)
        assert conjugated not in (swap01, swap12)

    def test_maximal_bisection(self, pair3):
        b = maximal_bisection_through(pair3, 5)
        assert 5 in b
        assert b.is_full

    def test_all_bisections_of_pair2(self, pair2):
        found = list(all_bisections(pair2))
        assert found[0].arrows == ()
        # partial bijections of a two-point set
        assert len(found) == 7


class TestFullGroup:
    def test_pair3_is_symmetric_group(self, pair3):
        group = full_group(pair3)
        assert group.order == 6
        assert [b.arrows for b in group] == [
            (0, 4, 8),
            (0, 5, 7),
            (1, 3, 8),
            (1, 5, 6),
            (2, 3, 7),
            (2, 4, 6),
        ]
        assert len(rho_image(group)) == 6
        assert rho_kernel(group) == [unit_bisection(pair3)]

    def test_group_bundle_has_trivial_rho(self, z4):
        group = full_group(z4)
        assert group.order == 4
        assert rho_image(group) == [(0,)]
        assert len(rho_kernel(group)) == 4

    def test_group_law(self, pair3):
        group = full_group(pair3)
        for a in group:
            assert group.multiply(a, group.inverse(a)) == group.identity
            for b in group:
                assert group.multiply(a, b) in group

    def test_limit(self):
        with pytest.raises(SizeLimitError) as info:
            full_group(pair_groupoid(4), limit=10)
        assert info.value.limit == 10


class TestInverseSemigroupLaws:
    @pytest.mark.parametrize("fixture", ["pair3", "z4", "free_action"])
    def test_order_is_arrow_inclusion(self, request, fixture):
        found = list(all_bisections(request.getfixturevalue(fixture)))
        for a in found:
            for b in found:
                assert leq(a, b) == (a.arrow_set <= b.arrow_set)

    @pytest.mark.parametrize("fixture", ["pair3", "z4", "free_action"])
    def test_regular_and_involutive(self, request, fixture):
        for a in all_bisections(request.getfixturevalue(fixture)):
            assert multiply(multiply(a, inverse(a)), a) == a
            assert inverse(inverse(a)) == a

    def test_products_stay_bisections(self, pair3):
        found = list(all_bisections(pair3))
        assert len(found) == 34
        for a in found:
            for b in found:
                product = multiply(a, b)
                assert len(product.src_set) == len(product) == len(product.rng_set)


class TestFullGroupSizes:
    @pytest.mark.parametrize("n,order", [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)])
    def test_pair_groupoid_gives_symmetric_group(self, n, order):
        assert full_group(pair_groupoid(n)).order == order

    @pytest.mark.parametrize("fixture", ["pair3", "free_action"])
    def test_rho_is_injective_without_isotropy(self, request, fixture):
        group = full_group(request.getfixturevalue(fixture))
        assert len(rho_image(group)) == group.order
        assert len(rho_kernel(group)) == 1

    def test_rho_is_injective_on_pair4(self):
        group = full_group(pair_groupoid(4))
        assert len({tuple(sorted(rho(b).items())) for b in group}) == 24
        assert len(rho_kernel(group)) == 1
