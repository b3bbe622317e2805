"""
Annihilators of linear forms in graded quotient rings.

For a linear form l, multiplication by l maps the degree-k piece to the
degree-(k+1) piece; its kernel in each degree is the degree-k part of Ann(l).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..algebra.polynomial import Gf2Poly
from ..algebra.quotient import QuotientRing
from ..core.gf2 import gf2_kernel_basis, gf2_nullity
from ..infra.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnnProfile:
    form: Gf2Poly
    kernel_dims: Tuple[int, ...]  # degrees 1..D


def _check_linear(ell: Gf2Poly) -> None:
    if ell.is_zero() or ell.degree() != 1 or not ell.is_homogeneous():
        raise PreconditionError("annihilators are computed for nonzero linear forms only")


def _check_horizon(q: QuotientRing, D: int) -> None:
    if D + 1 > q.degree_bound:
        raise PreconditionError(
            f"degree {D} needs a quotient computed to degree {D + 1}, have {q.degree_bound}"
        )


def kernel_dimension(q: QuotientRing, ell: Gf2Poly, k: int) -> int:
    return gf2_nullity(q.multiplication_matrix(ell, k))


def ann_profile(q: QuotientRing, ell: Gf2Poly, D: int) -> AnnProfile:
    """
    Kernel dimensions of multiplication by `ell` in degrees 1..D.

    Raises:
        PreconditionError: if ell is not a nonzero linear form or D + 1 exceeds the degree bound
    """
    _check_linear(ell)
    _check_horizon(q, D)
    return AnnProfile(ell, tuple(kernel_dimension(q, ell, k) for k in range(1, D + 1)))


def ann_generated_by(q: QuotientRing, ell: Gf2Poly, gens: Sequence[Gf2Poly], D: int) -> bool:
    """
    True iff <gens> equals Ann(ell) in every degree 0..D.

    The generators must annihilate ell; the degree-k dimension of <gens> is
    HF(q)(k) - HF(q / <gens>)(k).
    """
    _check_linear(ell)
    _check_horizon(q, D)
    gens = [q.normal_form(g) for g in gens]
    for g in gens:
        if not q.normal_form(ell * g).is_zero():
            return False
    hf = q.hilbert_function(D)
    if gens:
        smaller = QuotientRing.build(list(q.groebner) + gens, q.ring, D, q.order)
        hf_smaller = smaller.hilbert_function(D)
    else:
        hf_smaller = hf
    for k in range(D + 1):
        if hf[k] - hf_smaller[k] != kernel_dimension(q, ell, k):
            return False
    return True


def degree_one_kernel(q: QuotientRing, ell: Gf2Poly) -> List[Gf2Poly]:
    """Basis of the linear forms killed by ell, in left-to-right pivot order."""
    _check_linear(ell)
    return [q.from_coordinates(v, 1) for v in gf2_kernel_basis(q.multiplication_matrix(ell, 1))]


def ann_linear_generators(q: QuotientRing, ell: Gf2Poly, D: int) -> Optional[Tuple[Gf2Poly, Gf2Poly]]:
    """
    Two linear forms generating Ann(ell) through degree D, if such a pair exists.

    Any generating pair must span the degree-1 kernel, so it is enough to
    test the kernel basis when that kernel is two-dimensional.
    """
    _check_horizon(q, D)
    basis = degree_one_kernel(q, ell)
    if len(basis) != 2:
        return None
    if ann_generated_by(q, ell, basis, D):
        return basis[0], basis[1]
    return None


def linear_annihilator_forms(q: QuotientRing, D: int) -> List[Tuple[Gf2Poly, Tuple[Gf2Poly, Gf2Poly]]]:
    """Every nonzero linear form whose annihilator is generated by two linear forms."""
    found = []
    for ell in q.ring.linear_forms():
        pair = ann_linear_generators(q, ell, D)
        if pair is not None:
            found.append((ell, pair))
    logger.debug(f"{len(found)} linear forms have an annihilator generated by two linear forms")
    return found
