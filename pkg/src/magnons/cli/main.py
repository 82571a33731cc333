"""Command-line entry point: ``magnons {state,rs,graph,table,verify}``."""

import argparse
import logging
import sys
from typing import List, Optional

from magnons.cli.commands import cmd_graph, cmd_rs, cmd_state, cmd_table, cmd_verify
from magnons.cli.config import ALL, ROW, OutputFormat, RunConfig, RunMode
from magnons.config import env
from magnons.errors import (
    InvalidInputError,
    InvalidSizeError,
    MagnonError,
    OutOfScopeError,
    ParseError,
)
from magnons.registry import CHECK_ORDER

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Errors caused by the command line itself rather than by a failed computation
USAGE_ERRORS = (ParseError, InvalidInputError, InvalidSizeError, OutOfScopeError)


def _add_label_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--second-row", type=int, metavar="S", help="hook label with second row [S]")
    group.add_argument("--row", action="store_true", help="the single-row label")
    group.add_argument("--all", action="store_true", help="every one-magnon label (default)")


def _add_run_options(parser: argparse.ArgumentParser, formats: List[str]) -> None:
    parser.add_argument("--n", type=int, required=True, help="number of ring nodes")
    parser.add_argument("--format", choices=formats, default="text", dest="output")
    parser.add_argument("--mode", choices=[m.value for m in RunMode], default=RunMode.CLOSED.value)
    parser.add_argument("--cap", type=int, default=None, help="brute-force cap on N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magnons",
        description="One-magnon Schur-Weyl states, RS labels and entangled graphs.",
    )
    parser.add_argument("--log-level", default=None, help="logging level (default from env)")
    sub = parser.add_subparsers(dest="command", required=True)

    state = sub.add_parser("state", help="print basis states with exact amplitudes")
    _add_run_options(state, ["text", "json"])
    _add_label_options(state)

    rs = sub.add_parser("rs", help="trace RS insertion of a binary configuration")
    rs.add_argument("word", nargs="?", default="", help="configuration such as 00100")
    rs.add_argument("--format", choices=["text", "json"], default="text", dest="output")
    rs.add_argument("--two-line", action="store_true", help="print positions over letters first")

    graph = sub.add_parser("graph", help="emit entangled graphs")
    _add_run_options(graph, ["text", "json", "dot"])
    _add_label_options(graph)

    table = sub.add_parser("table", help="concurrence table for every label")
    _add_run_options(table, ["text", "json"])

    verify = sub.add_parser("verify", help="run every cross-check for N = 2..n-max")
    verify.add_argument("--n-max", type=int, default=10)
    verify.add_argument("--cap", type=int, default=None, help="brute-force cap on N")
    verify.add_argument("--format", choices=["text", "json"], default="text", dest="output")
    verify.add_argument("--check", action="append", choices=CHECK_ORDER, dest="checks")
    return parser


def _selector(args: argparse.Namespace):
    if getattr(args, "second_row", None) is not None:
        return args.second_row
    if getattr(args, "row", False):
        return ROW
    return ALL


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        n=args.n,
        selector=_selector(args),
        output=OutputFormat(args.output),
        mode=RunMode(args.mode),
        cap=args.cap,
    )


def _progress(stage: str, message: str) -> None:
    print(f"[{stage}] {message}", file=sys.stderr)


def run(args: argparse.Namespace) -> int:
    """Dispatch a parsed command line; return the exit code."""
    passed = True
    if args.command == "state":
        text = cmd_state(_run_config(args))
    elif args.command == "rs":
        text = cmd_rs(args.word, OutputFormat(args.output), two_line=args.two_line)
    elif args.command == "graph":
        text = cmd_graph(_run_config(args))
    elif args.command == "table":
        text = cmd_table(_run_config(args))
    else:
        text, passed = cmd_verify(
            args.n_max,
            cap=args.cap,
            output=OutputFormat(args.output),
            checks=args.checks,
            progress_callback=_progress,
        )
    print(text)
    return EXIT_OK if passed else EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = (args.log_level or env.log_level).upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)

    try:
        return run(args)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MagnonError as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
