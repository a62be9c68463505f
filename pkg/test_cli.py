"""End-to-end tests for the gpd command line."""

import json

import pytest

from groupoids.cli import main
from groupoids.common.results import CheckResult, SequenceReport


def run(capsys, *argv):
    code = main([str(arg) for arg in argv])
    out = capsys.readouterr().out
    return code, out.splitlines()


def report(lines):
    return dict(line.split("=", 1) for line in lines)


class TestReports:
    def test_full_group_of_pair3(self, capsys, specs_dir):
        code, lines = run(capsys, "full-group", specs_dir / "pair3.gpd")
        assert code == 0
        assert lines == [
            "ORDER=6",
            "RHO_IMAGE_ORDER=6",
            "RHO_KERNEL_ORDER=1",
            "BISECTION_0=[0,4,8]",
            "BISECTION_1=[0,5,7]",
            "BISECTION_2=[1,3,8]",
            "BISECTION_3=[1,5,6]",
            "BISECTION_4=[2,3,7]",
            "BISECTION_5=[2,4,6]",
        ]

    def test_validate_corrupted(self, capsys, specs_dir):
        code, lines = run(capsys, "validate", specs_dir / "corrupted.gpd")
        assert code == 1
        assert lines == ["ARROWS=3", "UNITS=2", "VALID=false", "VIOLATION_0=inverse law at 2"]

    def test_validate_valid(self, capsys, specs_dir):
        code, lines = run(capsys, "validate", specs_dir / "s3.gpd")
        assert code == 0
        assert report(lines)["VALID"] == "true"

    def test_orbits(self, capsys, specs_dir):
        code, lines = run(capsys, "orbits", specs_dir / "two_blocks.gpd")
        assert code == 0
        assert lines == ["ORBITS=2", "ORBIT_0=[0,3]", "ORBIT_1=[4,7]"]

    def test_h1_of_cyclic_group(self, capsys, specs_dir):
        code, lines = run(capsys, "h1", specs_dir / "z4.gpd")
        values = report(lines)
        assert code == 0
        assert values["H1"] == "Z/4"
        assert values["TORUS_RANK_Z1"] == "0"
        assert values["ORBIT_0_ISOTROPY_ORDER"] == "4"
        assert values["ORBIT_0_CHARACTER_0"] == "0:0,1:0,2:0,3:0"
        assert values["ORBIT_0_CHARACTER_1"] == "0:0,1:1/4,2:1/2,3:3/4"

    def test_h1_of_pair_groupoid(self, capsys, specs_dir):
        _, lines = run(capsys, "h1", specs_dir / "pair3.gpd")
        values = report(lines)
        assert values["H1"] == "0"
        assert values["TORUS_RANK_Z1"] == "2"

    def test_norm_of_rotation(self, capsys, specs_dir):
        code, lines = run(capsys, "norm", specs_dir / "z4.gpd", "--element", "ind([1])", "--p", "3")
        values = report(lines)
        assert code == 0
        assert values["P"] == "3"
        assert values["I_NORM"] == "1"
        assert values["LOWER"] == "1.000000"
        assert values["UPPER"] == "1.000000"
        assert values["ISOMETRY"] == "certified"
        assert len(values["WITNESS"].split(",")) == 4

    def test_norm_at_infinity(self, capsys, specs_dir):
        _, lines = run(capsys, "norm", specs_dir / "pair2.gpd", "--element", "sum(ind([0]), ind([1]))", "--p", "inf")
        values = report(lines)
        assert values["P"] == "inf"
        assert values["I_NORM"] == "2"
        assert values["LOWER"] == values["UPPER"] == "2.000000"

    def test_norm_at_two_of_a_non_isometry(self, capsys, specs_dir):
        _, lines = run(capsys, "norm", specs_dir / "pair2.gpd", "--element", "sum(ind([0]), ind([1]))", "--p", "2")
        assert report(lines)["ISOMETRY"] == "undecided"

    def test_decompose(self, capsys, specs_dir):
        code, lines = run(capsys, "decompose", specs_dir / "pair2.gpd", "--element", "phase(0:1/2)*ind([1,2])")
        assert code == 0
        assert lines == ["BISECTION=[1,2]", "PHASE_0=1/2", "PHASE_3=0"]

    @pytest.mark.parametrize("spec,order", [("pair3.gpd", 6), ("z4.gpd", 2), ("s3.gpd", 6)])
    def test_aut_orders(self, capsys, specs_dir, spec, order):
        _, lines = run(capsys, "aut", specs_dir / spec)
        assert lines[0] == f"ORDER={order}"
        assert len(lines) == order + 1

    def test_verify(self, capsys, specs_dir):
        code, lines = run(capsys, "verify", specs_dir / "free_action.gpd", "--sequence", "outer", "--samples", "3")
        assert code == 0
        assert lines[-1] == "STATUS=pass"
        assert all(line.startswith("CHECK=") and "STATUS=pass" in line for line in lines[:-1])

    def test_json_output(self, capsys, specs_dir):
        code, lines = run(capsys, "--json", "orbits", specs_dir / "pair2.gpd")
        payload = json.loads("\n".join(lines))
        assert code == 0
        assert payload["command"] == "orbits"
        assert payload["entries"] == [["ORBITS", "1"], ["ORBIT_0", "[0,3]"]]

    def test_verify_by_theorem_label(self, capsys, specs_dir):
        code, lines = run(capsys, "verify", specs_dir / "pair3.gpd", "--theorem", "2.6", "--samples", "3")
        assert code == 0
        assert lines[-1] == "STATUS=pass"
        assert len(lines) == 8
        assert all("STATUS=pass WITNESS=-" in line for line in lines[:-1])

    @pytest.mark.parametrize("position", ["before", "after"])
    def test_json_flag_on_either_side(self, capsys, specs_dir, position):
        argv = ["verify", specs_dir / "pair2.gpd", "--sequence", "isometry", "--samples", "2"]
        argv = ["--json"] + argv if position == "before" else argv + ["--json"]
        code, lines = run(capsys, *argv)
        payload = json.loads("\n".join(lines))
        assert code == 0
        assert payload["command"] == "verify"
        assert payload["entries"][-1] == ["STATUS", "pass"]


GOLDEN_RUNS = [
    ("full_group_pair3.out", ["full-group", "pair3.gpd"]),
    ("norm_z4_p1.out", ["norm", "z4.gpd", "--element", "ind([1])", "--p", "1"]),
    ("verify_pair2_isometry.out", ["verify", "pair2.gpd", "--theorem", "2.6"]),
    ("validate_corrupted.out", ["validate", "corrupted.gpd"]),
    ("decompose_pair2.out", ["decompose", "pair2.gpd", "--element", "phase(0:1/2)*ind([1,2])"]),
    ("orbits_two_blocks.out", ["orbits", "two_blocks.gpd"]),
]


class TestGoldenOutput:
    @pytest.mark.parametrize("golden,argv", GOLDEN_RUNS)
    def test_stdout_matches_byte_for_byte(self, capsys, specs_dir, golden_dir, golden, argv):
        command, spec, *options = argv
        main([command, str(specs_dir / spec), *options])
        assert capsys.readouterr().out == (golden_dir / golden).read_text()


class TestExitCodes:
    def test_usage_error(self, capsys):
        assert main(["no-such-command"]) == 2

    def test_help(self, capsys):
        assert main(["--help"]) == 0

    def test_missing_file(self, capsys, tmp_path):
        code, lines = run(capsys, "orbits", tmp_path / "missing.gpd")
        assert code == 2
        assert lines[0] == "ERROR=FileNotFoundError"

    def test_parse_error(self, capsys, tmp_path):
        spec = tmp_path / "bad.gpd"
        spec.write_text("pair(3\n")
        code, lines = run(capsys, "orbits", spec)
        assert code == 2
        assert lines[0] == "ERROR=SpecParseError"

    def test_bad_exponent(self, capsys, specs_dir):
        code, lines = run(capsys, "norm", specs_dir / "pair2.gpd", "--element", "ind([0,3])", "--p", "0.5")
        assert code == 2
        assert lines[0] == "ERROR=InvalidNormParameterError"

    def test_unknown_arrow_in_element(self, capsys, specs_dir):
        code, lines = run(capsys, "decompose", specs_dir / "pair2.gpd", "--element", "ind([7])")
        assert code == 2
        assert lines[0] == "ERROR=UnknownIdError"

    def test_non_isometry_fails_to_decompose(self, capsys, specs_dir):
        code, lines = run(capsys, "decompose", specs_dir / "pair2.gpd", "--element", "ind([1])")
        assert code == 1
        assert lines[0] == "ERROR=NotFullBisectionError"

    def test_invalid_groupoid(self, capsys, specs_dir):
        code, lines = run(capsys, "orbits", specs_dir / "corrupted.gpd")
        assert code == 1
        assert lines[0] == "ERROR=InvalidGroupoidError"

    def test_limit_from_environment(self, capsys, specs_dir, monkeypatch):
        monkeypatch.setenv("GPD_FULL_GROUP_LIMIT", "2")
        code, lines = run(capsys, "full-group", specs_dir / "pair3.gpd")
        assert code == 1
        assert lines[0] == "ERROR=SizeLimitError"

    def test_failed_check_exits_one(self, capsys, specs_dir, mocker):
        failing = SequenceReport.from_checks(
            "isometry",
            [CheckResult(check_id="pi0", passed=False, witness="B=[1,2]", cases=1)],
        )
        runner = mocker.patch("groupoids.cli.commands.verify_sequences", return_value=failing)
        code, lines = run(capsys, "verify", specs_dir / "pair2.gpd", "--sequence", "isometry", "--seed", "5")
        assert code == 1
        assert lines == ["CHECK=pi0 STATUS=fail WITNESS=B=[1,2]", "STATUS=fail"]
        assert runner.call_args.kwargs == {"samples": 20, "seed": 5}

    def test_inner_sequence_needs_effective_groupoid(self, capsys, specs_dir):
        code, lines = run(capsys, "verify", specs_dir / "z3.gpd", "--sequence", "inner")
        assert code == 1
        assert lines[0] == "ERROR=EffectivenessRequiredError"

    def test_theorem_label_selects_the_sequence(self, capsys, specs_dir, mocker):
        passing = SequenceReport.from_checks("automorphism", [CheckResult(check_id="lift_injective", passed=True)])
        runner = mocker.patch("groupoids.cli.commands.verify_sequences", return_value=passing)
        code, _ = run(capsys, "verify", specs_dir / "pair2.gpd", "--theorem", "3.7A")
        assert code == 0
        assert runner.call_args.args[1] == "automorphism"

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "pair2.gpd"],
            ["verify", "pair2.gpd", "--theorem", "2.6", "--sequence", "isometry"],
            ["verify", "pair2.gpd", "--theorem", "4.1"],
            ["norm", "pair2.gpd", "--element", "ind([0,3])"],
        ],
    )
    def test_incomplete_arguments_are_usage_errors(self, capsys, specs_dir, argv):
        command, spec, *options = argv
        assert main([command, str(specs_dir / spec), *options]) == 2

    @pytest.mark.parametrize(
        "spec,label,exit_code,first_line",
        [
            ("pair2.gpd", "2.6", 0, "CHECK=isometry_norms STATUS=pass WITNESS=-"),
            ("free_action.gpd", "3.7I", 0, None),
            ("z3.gpd", "3.7O", 1, "ERROR=EffectivenessRequiredError"),
            ("corrupted.gpd", "3.7A", 1, "ERROR=InvalidGroupoidError"),
        ],
    )
    def test_verify_exit_codes(self, capsys, specs_dir, spec, label, exit_code, first_line):
        code, lines = run(capsys, "verify", specs_dir / spec, "--theorem", label, "--samples", "2")
        assert code == exit_code
        if first_line is not None:
            assert lines[0] == first_line
