"""Shared argument handling for the subcommands."""

import logging
from typing import Optional, Tuple

from ..algebra.polynomial import format_polynomial
from ..geometry.arrangement import Arrangement, read_arrangement
from ..presentations.ideals import IdealPresentation
from ..presentations.oracles import CovectorOracle, GeometricOracle, SignOracle
from ..reports import Report
from ..topology.salvetti import read_sign_vector_file

logger = logging.getLogger(__name__)


def load_source(args, report: Report) -> Tuple[SignOracle, Optional[Arrangement]]:
    """The oracle for an arrangement file or a --covectors file."""
    if getattr(args, "covectors", None):
        report.add_input(args.covectors)
        oracle = CovectorOracle(read_sign_vector_file(args.covectors))
        return oracle, None
    report.add_input(args.file)
    arrangement = read_arrangement(args.file, allow_repeats=getattr(args, "allow_repeats", False))
    return GeometricOracle(arrangement), arrangement


def describe_generators(p: IdealPresentation) -> list:
    return [
        f"{format_polynomial(g, p.ring)}    [{prov.describe()}]"
        for g, prov in zip(p.generators, p.provenance)
    ]


def add_source_arguments(parser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("file", nargs="?", help="Arrangement file ('d n' header, one form per line)")
    group.add_argument("--covectors", help="Covector file of a central arrangement ('n <count>' header)")
    parser.add_argument("--allow-repeats", action="store_true", help="Accept repeated hyperplanes")
