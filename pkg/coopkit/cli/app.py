import argparse
import sys
from typing import Optional, Sequence, TextIO

from loguru import logger

from coopkit import __version__
from coopkit.config import settings
from coopkit.exceptions import CoopkitError
from coopkit.utils.formatters import format_json
from coopkit.utils.logging import setup_logging
from coopkit.utils.metrics import metrics

from .handlers import algebra_router, decide_router, envelope_router, hoops_router, proofs_router
from .router import EXIT_INPUT, EXIT_OK, Outcome, Router

ROUTERS = (proofs_router, algebra_router, hoops_router, envelope_router, decide_router)


def common_options() -> argparse.ArgumentParser:
    """Flags every command accepts"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, help="seed for every sampled check")
    parent.add_argument("--format", choices=["text", "json"], help="output format")
    parent.add_argument("--budget", type=int, help="search budget (grid exponent or table size)")
    parent.add_argument("--log-level", help="loguru level, e.g. DEBUG")
    parent.add_argument("--metrics-file", help="write Prometheus metrics here on exit")
    return parent


def build_parser(routers: Sequence[Router] = ROUTERS) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coopkit",
        description="Proof checking, model search and decision procedures for hoops, coops and their logics",
    )
    parser.add_argument("--version", action="version", version=f"coopkit {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="<command>")
    commands.required = True
    parent = common_options()
    for router in routers:
        for command in router.commands:
            sub = commands.add_parser(command.name, help=command.help, description=command.help, parents=[parent])
            for argument in command.arguments:
                sub.add_argument(*argument.flags, **argument.options)
            sub.set_defaults(handler=command.handler)
    return parser


def _emit(outcome: Outcome, fmt: str, out: TextIO):
    print(format_json(outcome.payload) if fmt == "json" else outcome.text, file=out)


def _emit_error(error: CoopkitError, fmt: str, out: TextIO):
    if fmt == "json":
        print(format_json({"error": type(error).__name__, "message": str(error)}), file=out)
    else:
        print(f"error: {error}", file=sys.stderr)


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """Parse, dispatch and print; returns the exit code"""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # --help and --version exit 0, usage errors 2
        return EXIT_OK if not e.code else EXIT_INPUT

    setup_logging(args.log_level)
    if args.seed is not None:
        settings.SEED = args.seed
    fmt = args.format or settings.DEFAULT_FORMAT

    try:
        outcome = args.handler(args)
        _emit(outcome, fmt, out)
        code = outcome.exit_code
    except CoopkitError as e:
        logger.error(f"{args.command}: {e}")
        metrics.record_error(type(e).__name__, "cli")
        _emit_error(e, fmt, out)
        code = EXIT_INPUT
    finally:
        metrics.write(args.metrics_file or settings.METRICS_FILE)
    return code


def main():
    sys.exit(run())
