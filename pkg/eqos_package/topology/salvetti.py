"""
Face poset and Salvetti poset of a central arrangement.

Faces are sign vectors. F <= G in the face poset when G lies in the closure
of F, so chambers are the minimal elements and the zero vector is the top.
The Salvetti poset consists of pairs (F, C) with C a chamber below F, ordered
by (F', C') <= (F, C) iff F' <= F and C' = F' o C, where o is composition of
sign vectors. Complex conjugation acts by reflecting C through every
hyperplane containing F.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..geometry.arrangement import SignVector, format_sign_vector, parse_sign_vector
from ..infra.errors import SalvettiValidationError, SignVectorParseError
from ..infra.execution_logs import track_execution

logger = logging.getLogger(__name__)


def compose(f: SignVector, g: SignVector) -> SignVector:
    """(f o g)(i) = f(i) if f(i) != 0 else g(i)."""
    return tuple(a if a != 0 else b for a, b in zip(f, g))


def negate(v: SignVector) -> SignVector:
    return tuple(-s for s in v)


def face_leq(f: SignVector, g: SignVector) -> bool:
    """f <= g: wherever g is nonzero, f has the same sign."""
    return all(b == 0 or a == b for a, b in zip(f, g))


def is_chamber(v: SignVector) -> bool:
    return all(s != 0 for s in v)


@dataclass(frozen=True)
class FacePoset:
    faces: Tuple[SignVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))

    @property
    def n(self) -> int:
        return len(self.faces[0]) if self.faces else 0

    def leq(self, f: SignVector, g: SignVector) -> bool:
        return face_leq(f, g)

    def chambers(self) -> List[SignVector]:
        return [f for f in self.faces if is_chamber(f)]

    def maximal(self) -> List[SignVector]:
        return [f for f in self.faces if not any(g != f and face_leq(f, g) for g in self.faces)]


@dataclass(frozen=True)
class SalvettiElement:
    face: SignVector
    chamber: SignVector

    def __str__(self) -> str:
        return f"({format_sign_vector(self.face)},{format_sign_vector(self.chamber)})"


@dataclass(frozen=True)
class SalvettiPoset:
    face_poset: FacePoset
    elements: Tuple[SalvettiElement, ...]
    index: Dict[SalvettiElement, int] = field(compare=False, repr=False, default_factory=dict)

    def leq(self, a: SalvettiElement, b: SalvettiElement) -> bool:
        return face_leq(a.face, b.face) and a.chamber == compose(a.face, b.chamber)

    def chambers(self) -> List[SignVector]:
        return self.face_poset.chambers()


def _element_key(e: SalvettiElement) -> Tuple:
    rank = {1: 0, -1: 1, 0: 2}
    zeros = sum(1 for s in e.face if s == 0)
    return (zeros, [rank[s] for s in e.face], [rank[s] for s in e.chamber])


@track_execution("build_salvetti")
def build_salvetti(faces: Sequence[SignVector]) -> SalvettiPoset:
    """
    Build the Salvetti poset from a face (covector) list.

    Elements are sorted by number of zeros in the face, so every strict
    relation goes from a lower to a higher element index.

    Raises:
        SalvettiValidationError: if the list is empty, has no chambers, or is
            not closed under the compositions the order and involution need
    """
    faces = [tuple(f) for f in faces]
    if not faces:
        raise SalvettiValidationError("face list is empty")
    n = len(faces[0])
    if any(len(f) != n for f in faces):
        raise SalvettiValidationError("face sign vectors have different lengths")
    face_set = set(faces)
    chambers = [f for f in faces if is_chamber(f)]
    if not chambers:
        raise SalvettiValidationError("face list contains no chambers")
    chamber_set = set(chambers)

    elements = []
    for f in faces:
        for c in chambers:
            if face_leq(c, f):
                elements.append(SalvettiElement(f, c))

    for e in elements:
        reflected = compose(e.face, negate(e.chamber))
        if reflected not in chamber_set:
            raise SalvettiValidationError(
                f"reflection {format_sign_vector(e.face)} o -{format_sign_vector(e.chamber)} = "
                f"{format_sign_vector(reflected)} is not a chamber"
            )
        for g in face_set:
            if face_leq(g, e.face) and compose(g, e.chamber) not in chamber_set:
                raise SalvettiValidationError(
                    f"composition {format_sign_vector(g)} o {format_sign_vector(e.chamber)} = "
                    f"{format_sign_vector(compose(g, e.chamber))} is not a chamber"
                )

    elements.sort(key=_element_key)
    poset = SalvettiPoset(FacePoset(tuple(faces)), tuple(elements), {e: i for i, e in enumerate(elements)})
    logger.info(f"Salvetti poset: {len(faces)} faces, {len(chambers)} chambers, {len(elements)} elements")
    return poset


def involution(s: SalvettiPoset) -> Tuple[int, ...]:
    """
    The conjugation action as a permutation of element indices.

    Raises:
        SalvettiValidationError: if a reflected pair is missing from the poset
    """
    image = []
    for e in s.elements:
        partner = SalvettiElement(e.face, compose(e.face, negate(e.chamber)))
        if partner not in s.index:
            raise SalvettiValidationError(f"reflected element {partner} is missing from the poset")
        image.append(s.index[partner])
    return tuple(image)


def fixed_points(s: SalvettiPoset, perm: Optional[Sequence[int]] = None) -> List[SalvettiElement]:
    perm = involution(s) if perm is None else perm
    return [e for i, e in enumerate(s.elements) if perm[i] == i]


# ---------------------------------------------------------------------------
# Covector and tope files
# ---------------------------------------------------------------------------

def parse_sign_vector_file(text: str, source: Optional[str] = None, topes_only: bool = False) -> List[SignVector]:
    """
    Header "n <count>", then one sign string over {+,-,0} per line.

    Raises:
        SignVectorParseError: naming the offending line
    """
    lines = [
        (number, raw.strip())
        for number, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if not lines:
        raise SignVectorParseError("missing header 'n <count>'", source=source)
    header_line, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise SignVectorParseError(f"header must be 'n <count>', got {header!r}", line=header_line, source=source)
    n = int(parts[1])
    vectors = []
    for number, line in lines[1:]:
        v = parse_sign_vector(line, n, line=number, source=source)
        if topes_only and not is_chamber(v):
            raise SignVectorParseError(f"tope {line!r} contains a zero", line=number, source=source)
        vectors.append(v)
    return vectors


def read_sign_vector_file(path: Union[str, Path], topes_only: bool = False) -> List[SignVector]:
    path = Path(path)
    return parse_sign_vector_file(path.read_text(encoding="utf-8"), source=str(path), topes_only=topes_only)


def sign_vectors_to_text(vectors: Sequence[SignVector], n: int) -> str:
    return "\n".join([f"n {n}"] + [format_sign_vector(v) for v in vectors]) + "\n"
