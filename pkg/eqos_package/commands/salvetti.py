"""eqos salvetti: topological cross-check of the presentations through the Salvetti complex."""

import logging
from ..geometry.arrangement import cone
from ..infra.errors import PreconditionError
from ..presentations.checks import default_degree, salvetti_cross_validation
from ..presentations.oracles import GeometricOracle
from ..reports import Report
from ..topology.salvetti import read_sign_vector_file
from .common import add_source_arguments, load_source

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("salvetti", help="Salvetti complex homology and Borel cohomology")
    add_source_arguments(parser)
    parser.add_argument("--topes", help="Tope file checked against the chambers of --covectors")
    parser.add_argument("--degree", type=int, help="Borel truncation degree (default: rank + 2)")
    parser.add_argument("--equivariant", action="store_true", help="Also compute truncated Borel cohomology")
    parser.set_defaults(handler=run)


def run(args) -> Report:
    report = Report(command="salvetti" + (" --equivariant" if args.equivariant else ""))
    oracle, arrangement = load_source(args, report)

    if arrangement is not None and not arrangement.is_central:
        logger.warning("Arrangement is affine; coning it before building the Salvetti complex")
        report.note("affine input was coned; the last hyperplane is the one at infinity")
        arrangement = cone(arrangement)
        oracle = GeometricOracle(arrangement)

    if args.topes:
        if arrangement is not None:
            raise PreconditionError("--topes only accompanies --covectors")
        report.add_input(args.topes)
        topes = read_sign_vector_file(args.topes, topes_only=True)
        if sorted(topes) != sorted(oracle.chambers()):
            raise PreconditionError("tope file does not match the topes of the covector file")

    D = args.degree if args.degree is not None else default_degree(oracle.rank)
    report.degree = D
    if args.equivariant:
        report.note(f"Borel truncation at twist degree {D}; dimensions are valid in degrees 0..{D - 1}")

    result = salvetti_cross_validation(oracle, D, equivariant=args.equivariant)
    section = report.section("salvetti")
    for key in ("faces", "chambers", "elements", "fixed_points", "simplices", "betti", "os_hf"):
        section[key] = result[key]
    if args.equivariant:
        section["borel"] = result["borel"]
        section["eq_hf"] = result["eq_hf"]
    for name, passed in result["checks"].items():
        report.verdict(name, passed)
    return report
