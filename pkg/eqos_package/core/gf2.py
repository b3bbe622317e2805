"""
Dense and sparse GF(2) linear algebra.

Dense matrices are numpy uint8 arrays reduced with XOR row operations; pivots
are searched left to right so echelon forms and kernel bases are reproducible.
Chain-complex boundary matrices are large and sparse, so they are reduced
column by column with Python integers as bitsets instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


def _as_bits(matrix) -> np.ndarray:
    bits = np.array(matrix, dtype=np.uint8) % 2
    if bits.ndim != 2:
        raise ValueError(f"expected a 2-dimensional matrix, got shape {bits.shape}")
    return bits


@dataclass(frozen=True, eq=False)
class Gf2Matrix:
    bits: np.ndarray

    def __post_init__(self):
        bits = _as_bits(self.bits)
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "Gf2Matrix":
        if len(rows) == 0:
            return cls.zeros(0, cols or 0)
        return cls(np.array(rows, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(np.eye(n, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @property
    def cols(self) -> int:
        return self.bits.shape[1]

    def __add__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.bits.shape != other.bits.shape:
            raise ValueError(f"shape mismatch {self.bits.shape} vs {other.bits.shape}")
        return Gf2Matrix(self.bits ^ other.bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((self.bits.shape, self.bits.tobytes()))

    def matvec(self, vector: Sequence[int]) -> np.ndarray:
        v = np.array(vector, dtype=np.int64) % 2
        return ((self.bits.astype(np.int64) @ v) % 2).astype(np.uint8)

    def matmul(self, other: "Gf2Matrix") -> "Gf2Matrix":
        return Gf2Matrix((self.bits.astype(np.int64) @ other.bits.astype(np.int64)) % 2)

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix(self.bits.T.copy())

    def rank(self) -> int:
        return gf2_rank(self)


def gf2_row_reduce(m: Gf2Matrix) -> Tuple[np.ndarray, List[int]]:
    """Row-reduce a binary matrix over GF(2) to reduced row echelon form.

    Returns:
        (R, pivot_cols):
            R - reduced row echelon form, dtype uint8.
            pivot_cols - pivot column indices, left to right (length = rank).
    """
    R = m.bits.copy()
    rows, cols = R.shape
    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        candidates = np.nonzero(R[pivot_row:, col])[0]
        if candidates.size == 0:
            continue
        found = pivot_row + int(candidates[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        # Clear the column everywhere else in one vectorised XOR.
        hits = np.nonzero(R[:, col])[0]
        hits = hits[hits != pivot_row]
        if hits.size:
            R[hits] ^= R[pivot_row]
        pivot_cols.append(col)
        pivot_row += 1
    return R, pivot_cols


def gf2_rank(m: Gf2Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = gf2_row_reduce(m)
    return len(pivots)


def gf2_kernel_basis(m: Gf2Matrix) -> List[np.ndarray]:
    """
    Basis of the right kernel {v : m v = 0}.

    One vector per free column, in increasing column order; the basis has
    cols - rank elements.
    """
    cols = m.cols
    if m.rows == 0:
        return [np.eye(cols, dtype=np.uint8)[i] for i in range(cols)]
    R, pivots = gf2_row_reduce(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = np.zeros(cols, dtype=np.uint8)
        v[free] = 1
        for row, col in enumerate(pivots):
            if R[row, free]:
                v[col] = 1
        basis.append(v)
    return basis


def gf2_nullity(m: Gf2Matrix) -> int:
    return m.cols - gf2_rank(m)


def gf2_span_rank(vectors: Iterable[Sequence[int]], length: int) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    return gf2_rank(Gf2Matrix(np.array(rows, dtype=np.uint8).reshape(len(rows), length)))


def sparse_gf2_rank(columns: Sequence[int]) -> int:
    """
    Rank of a GF(2) matrix given as column bitsets.

    Column j is the integer whose bit i is the (i, j) entry. The pivot of a
    column is its highest set bit, the largest row index holding a 1. Columns
    are reduced left to right by adding the earlier reduced column with the
    same pivot; the rank is the number of columns that survive.
    """
    pivots = {}
    rank = 0
    for column in columns:
        while column:
            low = column.bit_length() - 1
            reducer = pivots.get(low)
            if reducer is None:
                pivots[low] = column
                rank += 1
                break
            column ^= reducer
    return rank
