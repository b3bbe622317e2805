"""eqos reproduce: scripted reproduction of a worked example."""

import logging

from ..reports import Report
from ..scripts.reproduce import EXAMPLES, reproduce

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("reproduce", help="Reproduce a worked example from the fixtures")
    parser.add_argument("--example", choices=EXAMPLES, required=True, help="Which example to run")
    parser.add_argument("--workers", type=int, help="Threads for the fingerprint sweep")
    parser.set_defaults(handler=run)


def run(args) -> Report:
    logger.info(f"Reproducing example {args.example}")
    return reproduce(args.example, show_progress=args.show_progress, workers=args.workers)
