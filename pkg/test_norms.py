"""Tests for the I-norm, the regular representation and l^p norm bounds."""

import math
from fractions import Fraction

import numpy as np
import pytest

from groupoids.bisections import Bisection
from groupoids.common.errors import ConverseRequiresPNot2Error, InvalidNormParameterError
from groupoids.convolution import AlgebraElement, CircleFunction, CyclotomicNumber, LampertiElement, delta
from groupoids.norms import (
    certify_invertible_isometry,
    i_norm,
    p_norm,
    parse_p,
    regular_rep,
    upper_bound,
)


@pytest.fixture
def hadamard(pair2):
    """(d0 + d1 + d2 - d3) / sqrt 2: unitary but not of Lamperti form."""
    inverse_sqrt2 = CyclotomicNumber(8, [0, Fraction(1, 2), 0, 0, 0, 0, 0, Fraction(1, 2)])
    a = delta(pair2, 0) + delta(pair2, 1) + delta(pair2, 2) - delta(pair2, 3)
    return a.scale(inverse_sqrt2)


@pytest.fixture
def rotation(pair3):
    phases = CircleFunction({0: Fraction(1, 3), 4: Fraction(1, 2), 8: Fraction(1, 12)})
    return LampertiElement(phases, Bisection.of(pair3, [1, 5, 6])).as_element()


class TestINorm:
    def test_exact_sums(self, pair2):
        a = delta(pair2, 0).scale(2) + delta(pair2, 1).scale(-3)
        assert i_norm(a) == 5

    def test_rotated_point_mass(self, z4):
        assert i_norm(delta(z4, 1)) == 1

    def test_float_values(self, pair2):
        value = i_norm(delta(pair2, 0).scale(0.5) + delta(pair2, 2).scale(0.25j))
        assert isinstance(value, float)
        assert value == pytest.approx(0.75)


class TestRegularRep:
    def test_is_multiplicative(self, pair3, rotation):
        b = delta(pair3, 5) + delta(pair3, 1).scale(2)
        assert regular_rep(rotation * b) == regular_rep(rotation) @ regular_rep(b)

    def test_unit_acts_as_identity(self, pair2):
        unit = delta(pair2, 0) + delta(pair2, 3)
        assert regular_rep(unit).is_identity()

    def test_entries_follow_left_convolution(self, pair2):
        m = regular_rep(delta(pair2, 1)).to_complex()
        # d1 moves the arrow 2 onto 0 and the unit 3 onto 1
        assert m[0, 2] == 1
        assert m[1, 3] == 1
        assert np.count_nonzero(m) == 2


class TestNormBounds:
    def test_parse_p(self):
        assert parse_p("inf") == math.inf
        assert parse_p("1.5") == 1.5
        for bad in ("0.5", "nan", "two"):
            with pytest.raises(InvalidNormParameterError):
                parse_p(bad)

    def test_lamperti_elements_have_norm_one(self, rotation):
        for p in (1, 1.5, 3, "inf"):
            estimate = p_norm(regular_rep(rotation), p, iters=50, starts=4)
            assert estimate.lower == pytest.approx(1.0)
            assert estimate.upper == pytest.approx(1.0)

    def test_endpoints_are_exact(self, hadamard):
        for p in (1, "inf"):
            estimate = p_norm(regular_rep(hadamard), p)
            assert estimate.exact
            assert estimate.upper == pytest.approx(math.sqrt(2))

    def test_hadamard_interior_bounds(self, hadamard):
        estimate = p_norm(regular_rep(hadamard), 3, iters=100, starts=8, seed=0)
        assert estimate.lower > 1.1
        assert estimate.lower <= 2 ** (1 / 6) + 1e-9
        assert estimate.upper == pytest.approx(math.sqrt(2))
        assert estimate.lower <= estimate.upper

    def test_p2_uses_spectral_norm(self, hadamard):
        estimate = p_norm(regular_rep(hadamard), 2)
        assert estimate.upper == pytest.approx(1.0)

    def test_fixed_seed_is_deterministic(self, hadamard):
        first = p_norm(regular_rep(hadamard), 4, iters=30, starts=4, seed=7)
        second = p_norm(regular_rep(hadamard), 4, iters=30, starts=4, seed=7)
        assert first.lower == second.lower
        assert first.start_index == second.start_index

    def test_upper_bound_interpolates(self):
        moduli = np.array([[1.0, 1.0], [0.0, 1.0]])
        assert upper_bound(moduli, 1) == 2
        assert upper_bound(moduli, math.inf) == 2
        assert upper_bound(moduli, 2) == pytest.approx(2.0)


class TestIsometryCertificate:
    def test_lamperti_is_certified(self, rotation):
        certificate = certify_invertible_isometry(rotation, 3, iters=50)
        assert certificate.success
        assert certificate.status == "certified"
        assert certificate.data["bisection"] == [1, 5, 6]
        assert certificate.norm_upper == pytest.approx(1.0)

    def test_hadamard_is_refuted_away_from_two(self, hadamard):
        certificate = certify_invertible_isometry(hadamard, 3, iters=100)
        assert not certificate.success
        assert certificate.status == "refuted"
        assert certificate.witness_direction == "forward"
        assert certificate.norm_lower > 1.1

    def test_hadamard_at_two_is_undecidable(self, hadamard):
        with pytest.raises(ConverseRequiresPNot2Error):
            certify_invertible_isometry(hadamard, 2)


class TestExhaustive:
    @pytest.mark.parametrize("fixture", ["pair2", "z3", "free_action", "pair3"])
    def test_regular_rep_multiplies_point_masses(self, request, fixture):
        g = request.getfixturevalue(fixture)
        for x in g.arrows:
            for y in g.arrows:
                assert regular_rep(delta(g, x) * delta(g, y)) == regular_rep(delta(g, x)) @ regular_rep(delta(g, y))

    @pytest.mark.parametrize("fixture", ["pair3", "z4", "s3"])
    def test_i_norm_is_submultiplicative(self, request, fixture):
        g = request.getfixturevalue(fixture)
        generator = np.random.default_rng(3)
        for _ in range(30):
            a, b = (
                AlgebraElement(g, {x: int(v) for x, v in zip(g.arrows, generator.integers(-4, 5, size=g.num_arrows))})
                for _ in range(2)
            )
            assert i_norm(a * b) <= i_norm(a) * i_norm(b)
