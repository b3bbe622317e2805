"""eqos presentation: generators, reduced Groebner basis and Hilbert function of one ring."""

import logging

from ..algebra.polynomial import format_polynomial
from ..presentations.checks import default_degree, quotient_of
from ..presentations.ideals import presentation_for
from ..reports import Report
from .common import add_source_arguments, describe_generators, load_source

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("presentation", help="Build the os, eq or vg presentation of an arrangement")
    add_source_arguments(parser)
    parser.add_argument("--ring", choices=["os", "eq", "vg"], default="eq", help="Which ring to present")
    parser.add_argument("--degree", type=int, help="Hilbert function horizon (default: rank + 2)")
    parser.add_argument("--no-prune", action="store_true", help="Keep every enumerated generator")
    parser.set_defaults(handler=run)


def run(args) -> Report:
    report = Report(command=f"presentation --ring {args.ring}")
    oracle, arrangement = load_source(args, report)
    D = args.degree if args.degree is not None else default_degree(oracle.rank)
    report.degree = D

    info = report.section("arrangement")
    if arrangement is not None:
        info["dimension"] = arrangement.dim
    info["hyperplanes"] = oracle.n
    info["rank"] = oracle.rank

    p = presentation_for(oracle, args.ring, prune=not args.no_prune)
    report.section("generators")["generators"] = describe_generators(p)

    bound = max(D, oracle.n) if args.ring == "vg" else D
    q = quotient_of(p, bound)
    report.section("groebner")["basis"] = [format_polynomial(g, p.ring) for g in q.groebner]

    hilbert = report.section("hilbert")
    hilbert["hf"] = q.hilbert_function(D)
    if args.ring == "vg":
        total = q.total_dimension()
        chambers = len(oracle.chambers())
        hilbert["total_dimension"] = total
        hilbert["chambers"] = chambers
        report.verdict("vg_dimension_equals_chambers", total == chambers)
    logger.info(f"Presented {args.ring} ring: {len(p.generators)} generators, HF {hilbert['hf']}")
    return report
