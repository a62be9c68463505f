"""Tests for the groupoid constructions, spec files and element expressions."""

from fractions import Fraction

import pytest

from groupoids.builders import (
    ExplicitSpec,
    PairSpec,
    action_groupoid,
    cyclic_group,
    group_groupoid,
    pair_groupoid,
    parse_element,
    parse_spec,
    product_groupoid,
    symmetric_group,
    table_group,
    tokenize,
)
from groupoids.cli.commands import load_groupoid
from groupoids.common.errors import (
    InvalidGroupoidError,
    NotABisectionError,
    SpecParseError,
    UnknownIdError,
)
from groupoids.convolution import CyclotomicNumber, delta, unit_element
from groupoids.core import orbits, validate


class TestConstructions:
    def test_action_numbering(self, free_action):
        assert free_action.units == (0, 2)
        assert free_action.src[1] == 0
        assert free_action.rng[1] == 2
        assert free_action.inv[1] == 3

    def test_symmetric_group_order(self):
        group = symmetric_group(3)
        assert group.order == 6
        assert group.identity == 0
        assert len(group.generators) == 2

    def test_table_group_finds_its_identity(self):
        group = table_group([[1, 0], [0, 1]])
        assert group.identity == 1
        g = group_groupoid(group)
        assert g.units == (1,)

    def test_table_without_identity(self):
        with pytest.raises(InvalidGroupoidError):
            table_group([[1, 1], [1, 1]])

    def test_inconsistent_action_is_rejected(self):
        with pytest.raises(InvalidGroupoidError, match="action not a group action"):
            action_groupoid(cyclic_group(2), 3, [[1, 2, 0]])

    def test_action_needs_one_permutation_per_generator(self):
        with pytest.raises(InvalidGroupoidError):
            action_groupoid(cyclic_group(3), 3, [])
        with pytest.raises(InvalidGroupoidError):
            action_groupoid(cyclic_group(2), 2, [[0, 0]])

    def test_product_numbering(self, z3):
        g = product_groupoid(z3, pair_groupoid(2))
        assert g.num_arrows == 12
        assert g.units == (0, 3)
        # (1, (0, 1)) has id 1*4 + 1
        assert (g.rng[5], g.src[5]) == (0, 3)
        assert validate(g).valid

    def test_orbits_of_product(self, z3):
        assert orbits(product_groupoid(pair_groupoid(2), z3)) == [(0, 9)]


class TestSpecParsing:
    def test_canonical_rendering(self):
        assert parse_spec("pair( 3 )").render() == "pair(3)"
        spec = parse_spec("union(group(cyclic 4),\n action(sym 3, 3, [[1, 0, 2], [1, 2, 0]]))")
        assert spec.render() == "union(group(cyclic 4), action(sym 3, 3, [[1, 0, 2], [1, 2, 0]]))"
        assert parse_spec(spec.render()) == spec

    def test_comments_are_skipped(self):
        assert parse_spec("# two points\npair(2)\n# done\n") == PairSpec(2)

    def test_spec_files(self, specs_dir):
        assert load_groupoid(specs_dir / "pair3.gpd") == pair_groupoid(3)
        assert load_groupoid(specs_dir / "s3.gpd").num_arrows == 6
        assert load_groupoid(specs_dir / "klein_pair.gpd").num_arrows == 16

    def test_explicit_tables_are_not_validated(self, specs_dir):
        g = load_groupoid(specs_dir / "corrupted.gpd")
        assert validate(g).violations == ["inverse law at 2"]

    def test_explicit_rendering(self, specs_dir):
        spec = parse_spec((specs_dir / "corrupted.gpd").read_text())
        assert isinstance(spec, ExplicitSpec)
        assert spec.render().startswith("explicit{units: [0, 1]; arrows: 3; src: [0, 1, 0];")

    def test_unterminated_spec_reports_position(self):
        with pytest.raises(SpecParseError) as info:
            parse_spec("pair(3")
        assert (info.value.line, info.value.column) == (1, 7)

    def test_unknown_construction_reports_position(self):
        with pytest.raises(SpecParseError) as info:
            parse_spec("# header\nunion(pair(2),\n  blob(1))")
        assert (info.value.line, info.value.column) == (3, 3)
        assert "unknown construction" in str(info.value)

    def test_unexpected_character(self):
        with pytest.raises(SpecParseError) as info:
            tokenize("pair(2) $")
        assert info.value.column == 9

    def test_bad_values(self):
        for text in ("pair(0)", "pair(2) pair(2)", "group(cyclic -1)", "explicit{units: [0]}"):
            with pytest.raises(SpecParseError):
                parse_spec(text)

    def test_explicit_arrow_count_must_match(self):
        text = "explicit{units: [0]; arrows: 2; src: [0]; rng: [0]; inv: [0]; comp: [[0, 0, 0]]}"
        with pytest.raises(SpecParseError, match="declares 2 arrows"):
            parse_spec(text)


class TestElementParsing:
    def test_indicator(self, pair2):
        assert parse_element("ind([1, 2])", pair2) == delta(pair2, 1) + delta(pair2, 2)

    def test_phase_defaults_to_zero(self, pair2):
        a = parse_element("phase(u0:1/2)*ind([1,2])", pair2)
        assert a == delta(pair2, 2) - delta(pair2, 1)
        assert a.is_exact

    def test_units_by_arrow_id(self, pair2):
        a = parse_element("phase(3:1/4, 0:0)*ind([0, 3])", pair2)
        assert a[3] == CyclotomicNumber.gaussian(0, 1)

    def test_sum_and_scale(self, pair2):
        assert parse_element("sum(ind([0]), ind([3]))", pair2) == unit_element(pair2)
        scaled = parse_element("scale(0, 1/2, ind([1]))", pair2)
        assert scaled[1] == CyclotomicNumber.gaussian(0, Fraction(1, 2))

    def test_decimals_make_floats(self, pair2):
        a = parse_element("scale(0.5, 0, ind([0]))", pair2)
        assert not a.is_exact
        assert a[0] == pytest.approx(0.5)

    def test_unknown_ids(self, pair2):
        for text in ("ind([9])", "phase(u5:0)*ind([0])", "phase(1:0)*ind([1])"):
            with pytest.raises(UnknownIdError):
                parse_element(text, pair2)

    def test_angles_must_be_exact(self, pair2):
        with pytest.raises(SpecParseError, match="exact fractions"):
            parse_element("phase(u0:0.5)*ind([0, 3])", pair2)

    def test_support_must_be_a_bisection(self, pair2):
        with pytest.raises(NotABisectionError):
            parse_element("ind([0, 1])", pair2)


CANONICAL_SPECS = [
    "pair(1)",
    "pair(2)",
    "pair(4)",
    "group(cyclic 1)",
    "group(cyclic 5)",
    "group(sym 1)",
    "group(sym 3)",
    "group(table [[0, 1], [1, 0]])",
    "group(table [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])",
    "action(cyclic 2, 2, [[1, 0]])",
    "action(cyclic 3, 3, [[1, 2, 0]])",
    "action(cyclic 4, 2, [[1, 0]])",
    "action(cyclic 2, 3, [[0, 2, 1]])",
    "action(sym 3, 3, [[1, 0, 2], [1, 2, 0]])",
    "action(sym 3, 2, [[1, 0], [0, 1]])",
    "union(pair(2), pair(2))",
    "union(group(cyclic 2), pair(3))",
    "product(pair(2), group(cyclic 3))",
    "union(product(pair(2), pair(2)), action(cyclic 2, 2, [[1, 0]]))",
    "explicit{units: [0]; arrows: 1; src: [0]; rng: [0]; inv: [0]; comp: [[0, 0, 0]]}",
]


class TestRenderCorpus:
    @pytest.mark.parametrize("text", CANONICAL_SPECS)
    def test_render_reproduces_canonical_text(self, text):
        spec = parse_spec(text)
        assert spec.render() == text
        assert spec.build() == parse_spec(spec.render()).build()

    @pytest.mark.parametrize("text", CANONICAL_SPECS)
    def test_layout_does_not_matter(self, text):
        assert parse_spec("# spread out\n" + text.replace(", ", " ,\n  ")) == parse_spec(text)
