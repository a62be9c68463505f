"""Command-line entry point: `gpd <command> <spec-file> [options]`.

Reports go to stdout as KEY=VALUE lines (or JSON with --json); logs go to
stderr. Exit codes: 0 success, 1 failed check or invalid groupoid, 2 usage
or parse error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from ..common.errors import (
    GroupoidError,
    InvalidNormParameterError,
    SpecParseError,
    UnknownIdError,
)
from ..common.results import CommandResult
from ..common.settings import get_settings
from ..verification.runner import DEFAULT_SAMPLES, SEQUENCES, THEOREMS
from . import commands

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (SpecParseError, UnknownIdError, InvalidNormParameterError)


def configure_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(
        level=getattr(logging, level or get_settings().log_level, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpd", description="Finite groupoids, their full groups and convolution algebras"
    )
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")
    parser.add_argument("--log-level", default=None, help="Override GPD_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_spec(name: str, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=help_text)
        # SUPPRESS leaves a top-level --json in place
        command.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="Print the report as JSON")
        command.add_argument("spec", help="Path to a groupoid spec file")
        return command

    with_spec("validate", "Check the groupoid axioms")
    with_spec("orbits", "List the orbits of the unit space")
    full = with_spec("full-group", "Enumerate the full group")
    full.add_argument("--limit", type=int, default=None, help="Enumeration cap (default: GPD_FULL_GROUP_LIMIT)")
    with_spec("h1", "Describe H^1(G, T)")

    norm = with_spec("norm", "Estimate the p-operator norm of an element")
    norm.add_argument("--element", required=True, help="Element expression, e.g. 'ind([0,3])'")
    norm.add_argument("--p", required=True, help="Exponent in [1, inf]")
    norm.add_argument("--iters", type=int, default=None, help="Ascent iterations per start")
    norm.add_argument("--seed", type=int, default=None, help="Random seed (default: GPD_NORM_SEED)")
    norm.add_argument("--tol", type=float, default=None, help="Isometry tolerance")

    decompose = with_spec("decompose", "Write an invertible isometry as f * 1_B")
    decompose.add_argument("--element", required=True, help="Element expression")

    aut = with_spec("aut", "Enumerate Aut(G)")
    aut.add_argument("--limit", type=int, default=None, help="Enumeration cap (default: GPD_AUT_LIMIT)")

    verify = with_spec("verify", "Verify one split exact sequence")
    target = verify.add_mutually_exclusive_group(required=True)
    target.add_argument("--theorem", choices=list(THEOREMS), help="Split sequence to verify, by theorem label")
    target.add_argument("--sequence", choices=sorted(SEQUENCES), help="Split sequence to verify, by name")
    verify.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="Random cases per check")
    verify.add_argument("--seed", type=int, default=None, help="Random seed (default: GPD_NORM_SEED)")
    return parser


def dispatch(args: argparse.Namespace) -> CommandResult:
    g = commands.load_groupoid(args.spec)
    if args.command == "validate":
        return commands.run_validate(g)
    if args.command == "orbits":
        return commands.run_orbits(g)
    if args.command == "full-group":
        return commands.run_full_group(g, limit=args.limit)
    if args.command == "h1":
        return commands.run_h1(g)
    if args.command == "norm":
        return commands.run_norm(g, args.element, args.p, iters=args.iters, seed=args.seed, tol=args.tol)
    if args.command == "decompose":
        return commands.run_decompose(g, args.element)
    if args.command == "aut":
        return commands.run_aut(g, limit=args.limit)
    sequence = args.sequence or THEOREMS[args.theorem]
    return commands.run_verify(g, sequence, samples=args.samples, seed=args.seed)


def _error(command: str, exc: BaseException, exit_code: int) -> CommandResult:
    result = CommandResult(command=command, exit_code=exit_code)
    result.add("ERROR", type(exc).__name__)
    result.add("MESSAGE", " ".join(str(exc).split()))
    return result


def emit(result: CommandResult, as_json: bool) -> None:
    if as_json:
        print(result.model_dump_json(indent=2))
    else:
        for line in result.lines():
            print(line)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    configure_logging(args.log_level.upper() if args.log_level else None)
    try:
        result = dispatch(args)
    except USAGE_ERRORS as exc:
        logger.error(f"{args.command}: {exc}")
        result = _error(args.command, exc, EXIT_USAGE)
    except OSError as exc:
        logger.error(f"{args.command}: cannot read {args.spec}: {exc}")
        result = _error(args.command, exc, EXIT_USAGE)
    except GroupoidError as exc:
        logger.error(f"{args.command}: {exc}")
        result = _error(args.command, exc, EXIT_FAILED)

    emit(result, args.json)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
