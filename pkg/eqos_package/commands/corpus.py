"""eqos corpus: the flat-family property suite over fixture and random arrangements."""

import logging

from ..reports import Report
from ..scripts.corpus import run_corpus

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("corpus", help="Run the property suite over a random corpus")
    parser.add_argument("--size", type=int, help="Number of random arrangements (default: EQOS_CORPUS_SIZE)")
    parser.add_argument("--seed", type=int, help="Corpus seed (default: EQOS_CORPUS_SEED)")
    parser.add_argument("--degree", type=int, help="Horizon for every member (default: rank + 2 per member)")
    parser.add_argument("--skip-salvetti", action="store_true", help="Skip the Salvetti cross-validation")
    parser.add_argument("--workers", type=int, help="Threads for the fingerprint sweeps")
    parser.set_defaults(handler=run)


def run(args) -> Report:
    return run_corpus(
        size=args.size,
        seed=args.seed,
        degree=args.degree,
        skip_salvetti=args.skip_salvetti,
        show_progress=args.show_progress,
        workers=args.workers,
    )
