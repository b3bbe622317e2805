"""
Exact rational arithmetic and linear algebra over Q.

Rationals are `fractions.Fraction`: always in lowest terms with a positive
denominator, so arithmetic never rounds.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(token: str) -> Fraction:
    """
    Parse `integer | integer "/" positive-integer`.

    Raises:
        ValueError: on any other spelling (decimals, zero or signed denominators)
    """
    match = _RATIONAL_RE.match(token.strip())
    if not match:
        raise ValueError(f"malformed rational {token!r}")
    numerator, denominator = match.groups()
    if denominator is None:
        return Fraction(int(numerator))
    if int(denominator) == 0:
        raise ValueError(f"zero denominator in {token!r}")
    return Fraction(int(numerator), int(denominator))


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not match a {self.rows}x{self.cols} shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int = None) -> "QMatrix":
        entries = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    def transpose(self) -> "QMatrix":
        columns = tuple(tuple(self.entries[r][c] for r in range(self.rows)) for c in range(self.cols))
        return QMatrix(self.cols, self.rows, columns)

    def swap_rows(self, i: int, j: int) -> "QMatrix":
        rows = list(self.entries)
        rows[i], rows[j] = rows[j], rows[i]
        return QMatrix(self.rows, self.cols, tuple(rows))

    def scale_row(self, i: int, factor: Fraction) -> "QMatrix":
        if factor == 0:
            raise ValueError("row scaling factor must be nonzero")
        rows = list(self.entries)
        rows[i] = tuple(factor * v for v in rows[i])
        return QMatrix(self.rows, self.cols, tuple(rows))


def row_echelon(m: QMatrix) -> Tuple[List[List[Fraction]], List[int]]:
    """
    Gaussian elimination over Q, pivots chosen left to right.

    Returns:
        (rows, pivot_cols): the reduced row echelon form and its pivot columns
    """
    rows = [list(r) for r in m.entries]
    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(m.cols):
        found = next((r for r in range(pivot_row, m.rows) if rows[r][col] != 0), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [v / lead for v in rows[pivot_row]]
        for r in range(m.rows):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == m.rows:
            break
    return rows, pivot_cols


def qrank(m: QMatrix) -> int:
    """Exact rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = row_echelon(m)
    return len(pivots)
