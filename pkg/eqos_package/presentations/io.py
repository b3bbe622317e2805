"""
Ideal files.

Header "n <count> x <0|1>", then one polynomial per line in the polynomial
text syntax. Lines starting with '#' and blank lines are ignored.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from ..algebra.polynomial import PolyRing, format_polynomial, parse_polynomial
from ..infra.errors import IdealFileParseError, PolynomialParseError
from .ideals import IdealPresentation, Provenance

logger = logging.getLogger(__name__)


def parse_ideal_text(text: str, source: Optional[str] = None, label: str = "") -> IdealPresentation:
    lines = [
        (number, raw.split("#", 1)[0].strip())
        for number, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(number, line) for number, line in lines if line]
    if not lines:
        raise IdealFileParseError("missing header 'n <count> x <0|1>'", source=source)

    header_line, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "n" or parts[2] != "x" or not parts[1].isdigit() or parts[3] not in ("0", "1"):
        raise IdealFileParseError(f"header must be 'n <count> x <0|1>', got {header!r}", line=header_line, source=source)
    ring = PolyRing(int(parts[1]), has_x=parts[3] == "1")

    generators = []
    provenance = []
    for number, line in lines[1:]:
        try:
            poly = parse_polynomial(line, ring)
        except PolynomialParseError as e:
            raise IdealFileParseError(str(e), line=number, source=source) from e
        generators.append(poly)
        provenance.append(Provenance(0, note=f"{source or 'input'} line {number}"))

    return IdealPresentation(ring, tuple(generators), tuple(provenance), label or (Path(source).stem if source else ""))


def read_ideal_file(path: Union[str, Path]) -> IdealPresentation:
    path = Path(path)
    presentation = parse_ideal_text(path.read_text(encoding="utf-8"), source=str(path))
    logger.info(f"Loaded {len(presentation.generators)} generators from {path}")
    return presentation


def ideal_to_text(p: IdealPresentation, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {p.n} x {1 if p.has_x else 0}")
    lines.extend(format_polynomial(g, p.ring) for g in p.generators)
    return "\n".join(lines) + "\n"


def write_ideal_file(p: IdealPresentation, path: Union[str, Path], comment: Optional[str] = None) -> None:
    path = Path(path)
    path.write_text(ideal_to_text(p, comment), encoding="utf-8")
    logger.info(f"Wrote {len(p.generators)} generators to {path}")
