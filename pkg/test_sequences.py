"""Tests for the split exact sequence verifiers."""

import pytest

from groupoids.automorphisms import aut_group
from groupoids.bisections import full_group
from groupoids.builders import pair_groupoid
from groupoids.cohomology import cocycle_group
from groupoids.common.errors import EffectivenessRequiredError, InvalidGroupoidError, NotFullBisectionError
from groupoids.core import FiniteGroupoid
from groupoids.verification import (
    THEOREMS,
    CaseSampler,
    resolve_sequence,
    round_trip_params,
    run_check,
    verify_sequences,
)

ISOMETRY_CHECKS = [
    "isometry_norms",
    "pi0",
    "section_multiplicative",
    "semidirect_law",
    "sigma_homomorphism",
    "sigma_kernel",
    "sigma_section",
]


class TestCheckPlumbing:
    def test_first_witness_is_reported(self):
        result = run_check("even", [2, 4, 5, 7], lambda n: None if n % 2 == 0 else f"{n} is odd")
        assert not result.passed
        assert result.witness == "5_is_odd"
        assert result.cases == 3
        assert result.status == "fail"

    def test_library_errors_count_as_failures(self):
        def failure(_):
            raise NotFullBisectionError("partial support")

        result = run_check("full", [0], failure)
        assert result.witness == "NotFullBisectionError:_partial_support"

    def test_passing_check(self):
        result = run_check("trivial", range(3), lambda _: None)
        assert result.passed
        assert result.witness == "-"

    def test_sampler_is_exhaustive_below_the_limit(self):
        sampler = CaseSampler(samples=2, seed=0, exhaustive_limit=10)
        assert sampler.cases([1, 2, 3]) == [1, 2, 3]
        assert len(sampler.pairs([1, 2, 3])) == 9
        assert len(sampler.pairs(list(range(5)))) == 2

    def test_sampler_is_reproducible(self, pair3):
        group = full_group(pair3)
        first = CaseSampler(samples=5, seed=3).lamperti_elements(group)
        second = CaseSampler(samples=5, seed=3).lamperti_elements(group)
        assert first == second


class TestSequences:
    @pytest.mark.parametrize("fixture", ["pair2", "pair3", "free_action", "z3"])
    def test_isometry_sequence(self, request, fixture):
        report = verify_sequences(request.getfixturevalue(fixture), "isometry", samples=4, seed=1)
        assert report.success, report.error_details
        assert [check.check_id for check in report.checks] == ISOMETRY_CHECKS

    @pytest.mark.parametrize("fixture", ["pair2", "pair3", "z3", "s3"])
    def test_automorphism_sequence(self, request, fixture):
        report = verify_sequences(request.getfixturevalue(fixture), "automorphism", samples=4, seed=1)
        assert report.success, report.error_details
        assert all(check.cases > 0 for check in report.checks)

    @pytest.mark.parametrize("sequence", ["inner", "outer"])
    @pytest.mark.parametrize("fixture", ["pair2", "pair3", "free_action"])
    def test_effective_sequences(self, request, fixture, sequence):
        report = verify_sequences(request.getfixturevalue(fixture), sequence, samples=4, seed=1)
        assert report.success, report.error_details

    def test_checks_are_sorted(self, pair2):
        report = verify_sequences(pair2, "inner", samples=2)
        ids = [check.check_id for check in report.checks]
        assert ids == sorted(ids)

    @pytest.mark.parametrize("sequence", ["inner", "outer"])
    def test_effectiveness_is_required(self, z3, sequence):
        with pytest.raises(EffectivenessRequiredError):
            verify_sequences(z3, sequence, samples=2)

    def test_unknown_sequence(self, pair2):
        with pytest.raises(KeyError):
            verify_sequences(pair2, "exotic")

    def test_invalid_groupoid_is_rejected(self):
        broken = FiniteGroupoid.from_tables([0], [5], [0], [0], {(0, 0): 0})
        with pytest.raises(InvalidGroupoidError):
            verify_sequences(broken, "isometry")


class TestTheoremLabels:
    @pytest.mark.parametrize("label,sequence", sorted(THEOREMS.items()))
    def test_labels_resolve(self, label, sequence):
        assert resolve_sequence(label) == sequence
        assert resolve_sequence(sequence) == sequence

    def test_label_runs_the_named_sequence(self, pair2):
        by_label = verify_sequences(pair2, "2.6", samples=3, seed=2)
        by_name = verify_sequences(pair2, "isometry", samples=3, seed=2)
        assert by_label.model_dump() == by_name.model_dump()

    def test_unknown_label(self):
        with pytest.raises(KeyError):
            resolve_sequence("3.8")


class TestAutomorphismCoverage:
    def test_round_trip_covers_every_automorphism(self):
        g = pair_groupoid(4)
        automorphisms = aut_group(g)
        sampler = CaseSampler(samples=2, seed=0)
        params = round_trip_params(g, cocycle_group(g), automorphisms, sampler)
        assert len(automorphisms) == 24
        assert all(any(p.theta == theta for p in params) for theta in automorphisms)
        generators = cocycle_group(g).generators()
        assert len(params) == len(automorphisms) * (len(generators) + 2)

    def test_report_counts_the_exhaustive_round_trip(self, pair3):
        report = verify_sequences(pair3, "automorphism", samples=2, seed=0)
        checks = {check.check_id: check for check in report.checks}
        assert report.success, report.error_details
        expected = round_trip_params(pair3, cocycle_group(pair3), aut_group(pair3), CaseSampler(2, 0))
        assert checks["decompose_roundtrip"].cases == len(expected) >= len(aut_group(pair3))
        for check_id in ("lift_injective", "omega_kernel", "upsilon_phi_compatible"):
            assert checks[check_id].passed
