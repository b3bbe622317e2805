"""
Order complex of the Salvetti poset, its GF(2) homology, and truncated
Borel equivariant cohomology for the conjugation involution.

Boundary matrices are stored column-wise as Python int bitsets and reduced
with sparse_gf2_rank. The Borel computation uses the double complex
C^p (x) GF(2)[Z/2] resolved by the periodic resolution, whose differential
over GF(2) is 1 + tau in every degree.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.gf2 import sparse_gf2_rank
from ..infra.errors import AdmissibilityError, PreconditionError
from ..infra.execution_logs import track_execution
from .salvetti import SalvettiPoset

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


@dataclass(frozen=True)
class OrderComplex:
    vertex_count: int
    simplices: Tuple[Tuple[Simplex, ...], ...]  # by dimension
    index: Tuple[Dict[Simplex, int], ...] = field(compare=False, repr=False, default=())

    @classmethod
    def from_simplices(cls, vertex_count: int, by_dim: Sequence[Sequence[Simplex]]) -> "OrderComplex":
        layers = tuple(tuple(sorted(layer)) for layer in by_dim)
        index = tuple({s: i for i, s in enumerate(layer)} for layer in layers)
        return cls(vertex_count, layers, index)

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> List[int]:
        return [len(layer) for layer in self.simplices]


@track_execution("build_order_complex")
def build_order_complex(poset: SalvettiPoset) -> OrderComplex:
    """
    All chains of the poset, by depth-first extension along strict relations.

    Elements are sorted so that strict relations increase the index; a chain
    is therefore a strictly increasing vertex tuple.
    """
    elements = poset.elements
    count = len(elements)
    up: List[List[int]] = [[] for _ in range(count)]
    for i in range(count):
        for j in range(i + 1, count):
            if poset.leq(elements[i], elements[j]):
                up[i].append(j)
            elif poset.leq(elements[j], elements[i]):
                raise PreconditionError(f"element order is not compatible with {elements[j]} < {elements[i]}")

    by_dim: List[List[Simplex]] = []
    stack: List[Simplex] = [(i,) for i in reversed(range(count))]
    while stack:
        chain = stack.pop()
        dim = len(chain) - 1
        while len(by_dim) <= dim:
            by_dim.append([])
        by_dim[dim].append(chain)
        last = chain[-1]
        for j in reversed(up[last]):
            # j must lie above every vertex of the chain; transitivity gives it.
            stack.append(chain + (j,))

    complex_ = OrderComplex.from_simplices(count, by_dim)
    logger.info(f"Order complex: simplex counts {complex_.counts()}")
    return complex_


def _faces(simplex: Simplex) -> List[Simplex]:
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


def boundary_columns(c: OrderComplex, k: int) -> List[int]:
    """Columns of the boundary map C_k -> C_{k-1} as bitsets over (k-1)-simplices."""
    if k <= 0 or k > c.dimension:
        return []
    rows = c.index[k - 1]
    columns = []
    for simplex in c.simplices[k]:
        bits = 0
        for face in _faces(simplex):
            bits ^= 1 << rows[face]
        columns.append(bits)
    return columns


def homology_gf2(c: OrderComplex, top: Optional[int] = None) -> List[int]:
    """
    Betti numbers over GF(2) in degrees 0..top (default: the dimension).

    Betti_k = dim C_k - rank d_k - rank d_{k+1}.
    """
    top = c.dimension if top is None else top
    ranks = [sparse_gf2_rank(boundary_columns(c, k)) for k in range(top + 2)]
    counts = c.counts()
    betti = []
    for k in range(top + 1):
        size = counts[k] if k < len(counts) else 0
        betti.append(size - ranks[k] - ranks[k + 1])
    return betti


def euler_characteristic(c: OrderComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(c.counts()))


def involution_on_complex(c: OrderComplex, vertex_perm: Sequence[int]) -> List[List[int]]:
    """
    The induced permutation of k-simplices for every k.

    Raises:
        AdmissibilityError: if a simplex fixed as a set has a vertex that moves,
            or the image of a simplex is not a simplex
    """
    perms = []
    for k, layer in enumerate(c.simplices):
        perm = []
        for simplex in layer:
            image = tuple(sorted(vertex_perm[v] for v in simplex))
            if image not in c.index[k]:
                raise AdmissibilityError(f"image of simplex {simplex} is not a simplex")
            if image == simplex and any(vertex_perm[v] != v for v in simplex):
                raise AdmissibilityError(f"simplex {simplex} is fixed as a set but not pointwise")
            perm.append(c.index[k][image])
        perms.append(perm)
    return perms


def _total_degree_blocks(c: OrderComplex, n: int, D: int) -> List[Tuple[int, int, int]]:
    """(p, q, offset) blocks of the total complex in degree n, q <= D."""
    blocks = []
    offset = 0
    for q in range(0, min(n, D) + 1):
        p = n - q
        if p > c.dimension:
            continue
        blocks.append((p, q, offset))
        offset += len(c.simplices[p])
    return blocks


def _cofaces(c: OrderComplex, p: int) -> List[List[int]]:
    """For each p-simplex, the indices of the (p+1)-simplices containing it."""
    result: List[List[int]] = [[] for _ in c.simplices[p]]
    if p + 1 > c.dimension:
        return result
    rows = c.index[p]
    for j, simplex in enumerate(c.simplices[p + 1]):
        for face in _faces(simplex):
            result[rows[face]].append(j)
    return result


@track_execution("equivariant_cohomology")
def equivariant_cohomology_gf2(c: OrderComplex, vertex_perm: Sequence[int], D: int) -> List[int]:
    """
    Dimensions of the truncated Borel cohomology in degrees 0..D-1.

    The total complex has K^n = sum over p + q = n, 0 <= q <= D, of C^p, with
    differential delta + (1 + tau*). Truncating at q = D leaves degrees below
    D unaffected.

    Raises:
        AdmissibilityError: if the involution is not admissible on the complex
    """
    if D < 1:
        raise PreconditionError(f"Borel truncation degree must be at least 1, got {D}")
    perms = involution_on_complex(c, vertex_perm)
    cofaces = [_cofaces(c, p) for p in range(c.dimension + 1)]

    def differential(n: int) -> List[int]:
        target = {(p, q): offset for p, q, offset in _total_degree_blocks(c, n + 1, D)}
        columns = []
        for p, q, _ in _total_degree_blocks(c, n, D):
            for i in range(len(c.simplices[p])):
                bits = 0
                if (p + 1, q) in target:
                    base = target[(p + 1, q)]
                    for j in cofaces[p][i]:
                        bits ^= 1 << (base + j)
                if (p, q + 1) in target:
                    base = target[(p, q + 1)]
                    partner = perms[p][i]
                    if partner != i:
                        bits ^= (1 << (base + i)) ^ (1 << (base + partner))
                columns.append(bits)
        return columns

    ranks = {n: sparse_gf2_rank(differential(n)) for n in range(D)}
    dims = []
    for n in range(D):
        size = sum(len(c.simplices[p]) for p, _, _ in _total_degree_blocks(c, n, D))
        dims.append(size - ranks[n] - (ranks[n - 1] if n > 0 else 0))
    logger.info(f"Borel cohomology dims (valid below degree {D}): {dims}")
    return dims
