"""
eqos command-line entry point.

Reports go to stdout; logs and progress bars go to stderr.
"""

import argparse
import logging
import sys
from typing import List, Optional

from .commands import COMMANDS
from .infra.config import load_settings, override_settings
from .infra.errors import EqosError
from .infra.execution_logs import clear_execution_logs
from .reports import render_json, render_text

logger = logging.getLogger("eqos_package")

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqos",
        description="Exact GF(2) computations for equivariant Orlik-Solomon algebras of real arrangements",
    )
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="Logging level (default: EQOS_LOG_LEVEL or WARNING)")
    parser.add_argument("--log-file", help="Also write logs to this file")
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")
    parser.add_argument("--quiet", action="store_true", help="No progress bars")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def setup_logging(level: str, log_file: Optional[str] = None) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT, handlers=handlers, force=True)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand and print its report.

    Returns:
        0 when every verdict passed, 3 when some verdict failed, 2 on an input
        or precondition error
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.log_level:
        override_settings(log_level=args.log_level)
    settings = load_settings()
    setup_logging(settings.log_level, args.log_file)
    args.show_progress = not args.quiet and sys.stderr.isatty()

    clear_execution_logs()
    try:
        report = args.handler(args)
    except EqosError as e:
        logger.error(f"{args.command} failed: {e}", exc_info=settings.log_level == "DEBUG")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"{args.command} could not read its input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    report.attach_timing()
    sys.stdout.write(render_json(report) if args.json else render_text(report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
