"""
Cooriented real hyperplane arrangements with exact rational coefficients.

Hyperplane i (1-based in every public function) is the zero set of
omega_i(p) = a_i.p + b_i, with positive side {omega_i > 0}. The predicates
here are the data of the pointed matroid (empty intersections and excess
codimension) and of the pointed oriented matroid (empty open sign regions).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from ..core.fourier_motzkin import LinearConstraint, LinSystem, fm_feasible
from ..core.qmatrix import QMatrix, format_rational, parse_rational, qrank
from ..infra.errors import ArrangementError, ArrangementParseError, SignVectorParseError

logger = logging.getLogger(__name__)

SignVector = Tuple[int, ...]

_SIGN_CHARS = {"+": 1, "-": -1, "0": 0}


@dataclass(frozen=True)
class AffineForm:
    normal: Tuple[Fraction, ...]
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(Fraction(v) for v in self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return sum((a * p for a, p in zip(self.normal, point)), Fraction(0)) + self.offset

    def negated(self) -> "AffineForm":
        return AffineForm(tuple(-a for a in self.normal), -self.offset)

    def as_constraint(self, sign: int = 1) -> LinearConstraint:
        if sign < 0:
            return LinearConstraint(tuple(-a for a in self.normal), -self.offset)
        return LinearConstraint(self.normal, self.offset)


def _same_hyperplane(f: AffineForm, g: AffineForm) -> bool:
    u = f.normal + (f.offset,)
    v = g.normal + (g.offset,)
    return qrank(QMatrix.from_rows([u, v])) < 2


@dataclass(frozen=True)
class Arrangement:
    dim: int
    forms: Tuple[AffineForm, ...]
    allow_repeats: bool = False

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(self.forms))
        for i, form in enumerate(self.forms, start=1):
            if len(form.normal) != self.dim:
                raise ArrangementError(f"form {i} has {len(form.normal)} coefficients, expected {self.dim}")
            if not any(form.normal):
                raise ArrangementError(f"form {i} has a zero normal vector")
        if not self.allow_repeats:
            for i in range(len(self.forms)):
                for j in range(i):
                    if _same_hyperplane(self.forms[i], self.forms[j]):
                        raise ArrangementError(f"forms {j + 1} and {i + 1} define the same hyperplane")

    @property
    def n(self) -> int:
        return len(self.forms)

    @property
    def rank(self) -> int:
        if not self.forms:
            return 0
        return qrank(QMatrix.from_rows([f.normal for f in self.forms], cols=self.dim))

    @property
    def is_central(self) -> bool:
        return not intersection_empty(self, range(1, self.n + 1))

    def form(self, i: int) -> AffineForm:
        _check_index(self, i)
        return self.forms[i - 1]


@dataclass(frozen=True)
class SignPair:
    """Disjoint index sets (S+, S-), 1-based."""
    plus: FrozenSet[int] = frozenset()
    minus: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(self.plus))
        object.__setattr__(self, "minus", frozenset(self.minus))
        if self.plus & self.minus:
            raise ValueError(f"sign pair sets overlap in {sorted(self.plus & self.minus)}")
        if any(i < 1 for i in self.plus | self.minus):
            raise ValueError("sign pair indices are 1-based")

    @property
    def support(self) -> FrozenSet[int]:
        return self.plus | self.minus

    def swapped(self) -> "SignPair":
        return SignPair(self.minus, self.plus)

    def __str__(self) -> str:
        return f"(+{sorted(self.plus)}, -{sorted(self.minus)})"


def _check_index(a: Arrangement, i: int) -> None:
    if not 1 <= i <= a.n:
        raise ArrangementError(f"hyperplane index {i} out of range 1..{a.n}")


def _subset(a: Arrangement, s: Iterable[int]) -> List[int]:
    indices = sorted(set(s))
    for i in indices:
        _check_index(a, i)
    return indices


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def parse_arrangement(text: str, source: Optional[str] = None, allow_repeats: bool = False) -> Arrangement:
    """
    Parse the arrangement file format.

    Line 1 is "d n"; each of the next n lines holds d+1 rationals
    "a_1 ... a_d b" for the form a.p + b. Lines starting with '#' and blank
    lines are skipped.

    Raises:
        ArrangementParseError: naming the offending line
    """
    lines = [
        (number, raw.strip())
        for number, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if not lines:
        raise ArrangementParseError("missing header line 'd n'", source=source)

    header_line, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ArrangementParseError(f"header must be 'd n', got {header!r}", line=header_line, source=source)
    dim, count = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != count:
        line = body[count][0] if len(body) > count else None
        raise ArrangementParseError(f"header announces {count} forms, found {len(body)}", line=line, source=source)

    forms: List[AffineForm] = []
    for number, row in body:
        tokens = row.split()
        if len(tokens) != dim + 1:
            raise ArrangementParseError(
                f"expected {dim + 1} rationals, found {len(tokens)}", line=number, source=source
            )
        try:
            values = [parse_rational(t) for t in tokens]
        except ValueError as e:
            raise ArrangementParseError(str(e), line=number, source=source) from e
        if not any(values[:dim]):
            raise ArrangementParseError("zero normal vector", line=number, source=source)
        form = AffineForm(tuple(values[:dim]), values[dim])
        if not allow_repeats:
            for j, other in enumerate(forms, start=1):
                if _same_hyperplane(form, other):
                    raise ArrangementParseError(
                        f"repeats the hyperplane of form {j}", line=number, source=source
                    )
        forms.append(form)

    return Arrangement(dim, tuple(forms), allow_repeats=allow_repeats)


def read_arrangement(path: Union[str, Path], allow_repeats: bool = False) -> Arrangement:
    path = Path(path)
    arrangement = parse_arrangement(path.read_text(encoding="utf-8"), source=str(path), allow_repeats=allow_repeats)
    logger.info(f"Loaded arrangement from {path}: d={arrangement.dim}, n={arrangement.n}")
    return arrangement


def arrangement_to_text(a: Arrangement, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{a.dim} {a.n}")
    for form in a.forms:
        lines.append(" ".join(format_rational(v) for v in form.normal + (form.offset,)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def cone(a: Arrangement) -> Arrangement:
    """Homogenize every form with a new coordinate z and append z itself last."""
    forms = [AffineForm(f.normal + (f.offset,), Fraction(0)) for f in a.forms]
    forms.append(AffineForm((Fraction(0),) * a.dim + (Fraction(1),), Fraction(0)))
    return Arrangement(a.dim + 1, tuple(forms), allow_repeats=a.allow_repeats)


def negate_form(a: Arrangement, i: int) -> Arrangement:
    _check_index(a, i)
    forms = list(a.forms)
    forms[i - 1] = forms[i - 1].negated()
    return Arrangement(a.dim, tuple(forms), allow_repeats=a.allow_repeats)


def recoorient(a: Arrangement, signs: Sequence[int]) -> Arrangement:
    """Multiply form i by signs[i-1] (each +1 or -1)."""
    if len(signs) != a.n:
        raise ArrangementError(f"expected {a.n} signs, got {len(signs)}")
    forms = []
    for form, sign in zip(a.forms, signs):
        if sign not in (1, -1):
            raise ArrangementError(f"coorientation sign must be +1 or -1, got {sign}")
        forms.append(form if sign == 1 else form.negated())
    return Arrangement(a.dim, tuple(forms), allow_repeats=a.allow_repeats)


def restrict(a: Arrangement, subset: Iterable[int]) -> Arrangement:
    """The subarrangement on the given hyperplanes, renumbered in order."""
    indices = _subset(a, subset)
    return Arrangement(a.dim, tuple(a.forms[i - 1] for i in indices), allow_repeats=a.allow_repeats)


# ---------------------------------------------------------------------------
# Pointed (oriented) matroid data
# ---------------------------------------------------------------------------

def intersection_empty(a: Arrangement, s: Iterable[int]) -> bool:
    indices = _subset(a, s)
    if not indices:
        return False
    normals = [a.forms[i - 1].normal for i in indices]
    augmented = [a.forms[i - 1].normal + (a.forms[i - 1].offset,) for i in indices]
    return qrank(QMatrix.from_rows(normals, cols=a.dim)) < qrank(QMatrix.from_rows(augmented, cols=a.dim + 1))


def excess_codim(a: Arrangement, s: Iterable[int]) -> bool:
    """
    True iff the codimension of the (nonempty) intersection is below |S|.

    Raises:
        ArrangementError: if the intersection is empty
    """
    indices = _subset(a, s)
    if not indices:
        return False
    if intersection_empty(a, indices):
        raise ArrangementError(f"intersection of {indices} is empty; codimension undefined")
    normals = [a.forms[i - 1].normal for i in indices]
    return qrank(QMatrix.from_rows(normals, cols=a.dim)) < len(indices)


def sign_region_empty(a: Arrangement, sp: SignPair) -> bool:
    _subset(a, sp.support)
    rows = [a.forms[i - 1].as_constraint(1) for i in sorted(sp.plus)]
    rows += [a.forms[j - 1].as_constraint(-1) for j in sorted(sp.minus)]
    return not fm_feasible(LinSystem(a.dim, (), tuple(rows)))


def face_system(a: Arrangement, signs: Sequence[int]) -> LinSystem:
    """The system {sign(omega_i) = signs[i]} over the listed prefix of hyperplanes."""
    equalities = []
    stricts = []
    for form, sign in zip(a.forms, signs):
        if sign == 0:
            equalities.append(form.as_constraint())
        else:
            stricts.append(form.as_constraint(sign))
    return LinSystem(a.dim, tuple(equalities), tuple(stricts))


def sign_vector_of(a: Arrangement, point: Sequence[Fraction]) -> SignVector:
    signs = []
    for form in a.forms:
        value = form.evaluate(point)
        signs.append(1 if value > 0 else -1 if value < 0 else 0)
    return tuple(signs)


# ---------------------------------------------------------------------------
# Sign vectors
# ---------------------------------------------------------------------------

def format_sign_vector(v: SignVector) -> str:
    return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in v)


def parse_sign_vector(text: str, n: Optional[int] = None, line: Optional[int] = None,
                      source: Optional[str] = None) -> SignVector:
    token = text.strip()
    bad = sorted(set(token) - set(_SIGN_CHARS))
    if bad:
        raise SignVectorParseError(f"unexpected characters {bad} in sign vector {token!r}", line=line, source=source)
    if n is not None and len(token) != n:
        raise SignVectorParseError(
            f"sign vector {token!r} has length {len(token)}, expected {n}", line=line, source=source
        )
    return tuple(_SIGN_CHARS[c] for c in token)
