"""eqos compare: run the distinguishing ladder on two rings."""

import logging

from ..geometry.arrangement import read_arrangement
from ..infra.errors import PreconditionError
from ..invariants.distinguish import NO_SEPARATION_NOTE, Verdict, distinguish
from ..presentations.checks import default_degree, quotient_of
from ..presentations.ideals import presentation_for
from ..presentations.io import read_ideal_file
from ..reports import Report

logger = logging.getLogger(__name__)

IDEAL_FILE_DEGREE = 4

LINEAR_FORM_NOTE = (
    "the two-linear-generator sweep ranges over all nonzero linear forms "
    "and tests the degree-1 annihilator basis of each"
)


def register(subparsers) -> None:
    parser = subparsers.add_parser("compare", help="Try to tell two rings apart")
    parser.add_argument("files", nargs="*", help="Two arrangement files")
    parser.add_argument("--ideals", nargs=2, metavar=("IDEAL_A", "IDEAL_B"), help="Two ideal files instead")
    parser.add_argument("--ring", choices=["os", "eq"], default="eq", help="Ring to build from arrangement files")
    parser.add_argument("--degree", type=int, help="Invariant horizon (default: 4 for ideal files, rank + 2 otherwise)")
    parser.add_argument("--workers", type=int, help="Threads for the fingerprint sweep")
    parser.set_defaults(handler=run)


def run(args) -> Report:
    report = Report(command="compare")
    if args.ideals:
        if args.files:
            raise PreconditionError("give either two arrangement files or --ideals, not both")
        presentations = []
        for path in args.ideals:
            report.add_input(path)
            presentations.append(read_ideal_file(path))
        D = args.degree if args.degree is not None else IDEAL_FILE_DEGREE
    else:
        if len(args.files) != 2:
            raise PreconditionError("compare needs exactly two arrangement files (or --ideals A B)")
        arrangements = []
        for path in args.files:
            report.add_input(path)
            arrangements.append(read_arrangement(path))
        presentations = [presentation_for(a, args.ring) for a in arrangements]
        D = args.degree if args.degree is not None else default_degree(max(a.rank for a in arrangements))
    report.degree = D

    left, right = presentations
    if left.ring != right.ring:
        raise PreconditionError(f"rings differ: {left.ring.names} vs {right.ring.names}")

    q1 = quotient_of(left, D + 1)
    q2 = quotient_of(right, D + 1)
    report.section("left")["hf"] = q1.hilbert_function(D)
    report.section("right")["hf"] = q2.hilbert_function(D)

    result = distinguish(q1, q2, D, workers=args.workers)
    section = report.section("distinction")
    section["verdict"] = result.verdict.value
    if result.certificate is not None:
        section["certificate"] = result.certificate.kind
        section["description"] = result.certificate.description
        section["left"] = result.certificate.left
        section["right"] = result.certificate.right
        if result.certificate.kind == "linear_annihilator":
            report.note(LINEAR_FORM_NOTE)
    if result.verdict == Verdict.NOT_DISTINGUISHED:
        report.note(NO_SEPARATION_NOTE)
        report.note(LINEAR_FORM_NOTE)
    logger.info(f"compare: {result.verdict.value}")
    return report
