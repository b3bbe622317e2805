"""
Sources of pointed (oriented) matroid data.

The ideal builders only ask four questions about the hyperplanes: the rank,
whether an intersection is empty, whether a nonempty intersection has excess
codimension, and whether an open sign region is empty. A geometric oracle
answers them with exact linear algebra; a covector oracle answers them from
abstract oriented matroid data.
"""

import itertools
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Protocol, Sequence, Tuple, runtime_checkable

from ..geometry.arrangement import (
    Arrangement,
    SignPair,
    SignVector,
    excess_codim,
    intersection_empty,
    sign_region_empty,
)
from ..geometry.faces import chambers, enumerate_faces
from ..infra.errors import PreconditionError

logger = logging.getLogger(__name__)


@runtime_checkable
class SignOracle(Protocol):
    n: int
    rank: int

    def intersection_empty(self, s: FrozenSet[int]) -> bool: ...

    def excess_codim(self, s: FrozenSet[int]) -> bool: ...

    def sign_region_empty(self, sp: SignPair) -> bool: ...

    def faces(self) -> List[SignVector]: ...

    def chambers(self) -> List[SignVector]: ...


def excess_codim_from_signs(oracle: SignOracle, s: Iterable[int]) -> bool:
    """
    Excess codimension read from sign data alone.

    For a nonempty intersection, the normals on S are dependent exactly when
    some split S = S+ u S- has an empty open sign region.
    """
    indices = sorted(set(s))
    if not indices:
        return False
    for size in range(len(indices) + 1):
        for plus in itertools.combinations(indices, size):
            minus = frozenset(indices) - frozenset(plus)
            if oracle.sign_region_empty(SignPair(frozenset(plus), minus)):
                return True
    return False


class GeometricOracle:
    """Exact answers for a concrete arrangement, memoized per query."""

    def __init__(self, arrangement: Arrangement):
        self.arrangement = arrangement
        self.n = arrangement.n
        self.rank = arrangement.rank
        self._empty: Dict[FrozenSet[int], bool] = {}
        self._excess: Dict[FrozenSet[int], bool] = {}
        self._regions: Dict[SignPair, bool] = {}
        self._faces: Optional[List[SignVector]] = None

    def intersection_empty(self, s: FrozenSet[int]) -> bool:
        s = frozenset(s)
        if s not in self._empty:
            self._empty[s] = intersection_empty(self.arrangement, s)
        return self._empty[s]

    def excess_codim(self, s: FrozenSet[int]) -> bool:
        s = frozenset(s)
        if s not in self._excess:
            self._excess[s] = excess_codim(self.arrangement, s)
        return self._excess[s]

    def sign_region_empty(self, sp: SignPair) -> bool:
        if sp not in self._regions:
            self._regions[sp] = sign_region_empty(self.arrangement, sp)
        return self._regions[sp]

    def faces(self) -> List[SignVector]:
        if self._faces is None:
            self._faces = enumerate_faces(self.arrangement)
        return list(self._faces)

    def chambers(self) -> List[SignVector]:
        return chambers(self.arrangement, self.faces())


def face_leq(f: SignVector, g: SignVector) -> bool:
    """f <= g in the face order: g lies in the closure of f."""
    return all(b == 0 or a == b for a, b in zip(f, g))


def _rank_from_covectors(covectors: Sequence[SignVector]) -> int:
    flats = sorted({frozenset(i for i, s in enumerate(c) if s == 0) for c in covectors}, key=len)
    height: Dict[FrozenSet[int], int] = {}
    for flat in flats:
        height[flat] = max((height[g] + 1 for g in height if g < flat), default=0)
    return max(height.values(), default=0)


class CovectorOracle:
    """
    Answers for a central arrangement given only its covectors.

    Every intersection of a central arrangement contains the origin, so no
    intersection is empty; sign regions are read from the topes and excess
    codimension from sign regions.
    """

    def __init__(self, covectors: Sequence[SignVector]):
        covectors = [tuple(c) for c in covectors]
        if not covectors:
            raise PreconditionError("covector list is empty")
        n = len(covectors[0])
        if any(len(c) != n for c in covectors):
            raise PreconditionError("covectors have different lengths")
        if (0,) * n not in covectors:
            raise PreconditionError("covector data must contain the zero covector (central arrangement)")
        self.n = n
        self.covectors = sorted(set(covectors), key=lambda c: [{1: 0, -1: 1, 0: 2}[s] for s in c])
        self.topes = [c for c in self.covectors if all(s != 0 for s in c)]
        if not self.topes:
            raise PreconditionError("covector data contains no topes")
        self.rank = _rank_from_covectors(self.covectors)
        self._regions: Dict[SignPair, bool] = {}

    def intersection_empty(self, s: FrozenSet[int]) -> bool:
        return False

    def excess_codim(self, s: FrozenSet[int]) -> bool:
        return excess_codim_from_signs(self, s)

    def sign_region_empty(self, sp: SignPair) -> bool:
        if sp not in self._regions:
            self._regions[sp] = not any(
                all(t[i - 1] == 1 for i in sp.plus) and all(t[j - 1] == -1 for j in sp.minus)
                for t in self.topes
            )
        return self._regions[sp]

    def faces(self) -> List[SignVector]:
        return list(self.covectors)

    def chambers(self) -> List[SignVector]:
        return list(self.topes)


def as_oracle(source) -> SignOracle:
    if isinstance(source, Arrangement):
        return GeometricOracle(source)
    if isinstance(source, SignOracle):
        return source
    raise TypeError(f"cannot read matroid data from {type(source).__name__}")
