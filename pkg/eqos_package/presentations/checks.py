"""
Consistency checks tying the three presentations together.

Each check rebuilds what it needs from the arrangement (or oracle) and
returns a boolean; the command layer turns the booleans into verdicts.
"""

import itertools
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..algebra.groebner import buchberger, ideal_equal
from ..algebra.polynomial import Gf2Poly
from ..algebra.quotient import QuotientRing
from ..core.gf2 import Gf2Matrix, gf2_rank
from ..geometry.arrangement import Arrangement, SignVector, cone, recoorient
from ..infra.errors import PreconditionError
from ..topology.complex import build_order_complex, equivariant_cohomology_gf2, euler_characteristic, homology_gf2
from ..topology.salvetti import build_salvetti, fixed_points, involution
from .ideals import IdealPresentation, eq_ideal, os_ideal, specialize
from .oracles import SignOracle, as_oracle

logger = logging.getLogger(__name__)


def default_degree(rank: int) -> int:
    return rank + 2


def quotient_of(p: IdealPresentation, D: int) -> QuotientRing:
    return QuotientRing.build(p.generators, p.ring, D)


def psi_check(source) -> bool:
    """Setting x = 0 in the equivariant ideal gives back the Orlik-Solomon ideal."""
    oracle = as_oracle(source)
    result = ideal_equal(specialize(eq_ideal(oracle), 0).generators, os_ideal(oracle).generators)
    logger.info(f"psi check: {'PASS' if result else 'FAIL'}")
    return result


def graded_freeness(hf_eq: Sequence[int], hf_os: Sequence[int], rank: int) -> bool:
    """
    Hilbert-function signature of a free GF(2)[x]-module lifted from the OS algebra.

    First differences of hf_eq must equal hf_os degreewise, and hf_os must
    vanish above the rank.
    """
    if len(hf_eq) != len(hf_os) or not hf_eq:
        return False
    if hf_eq[0] != hf_os[0]:
        return False
    for k in range(1, len(hf_eq)):
        if hf_eq[k] - hf_eq[k - 1] != hf_os[k]:
            return False
    return all(v == 0 for v in hf_os[rank + 1:])


def freeness_check(source, D: int) -> bool:
    """
    Raises:
        PreconditionError: if D < rank + 1
    """
    oracle = as_oracle(source)
    if D < oracle.rank + 1:
        raise PreconditionError(f"freeness needs D >= rank + 1 = {oracle.rank + 1}, got {D}")
    hf_eq = quotient_of(eq_ideal(oracle), D).hilbert_function()
    hf_os = quotient_of(os_ideal(oracle), D).hilbert_function()
    result = graded_freeness(hf_eq, hf_os, oracle.rank)
    logger.info(f"freeness check: eq HF {hf_eq}, os HF {hf_os}: {'PASS' if result else 'FAIL'}")
    return result


def vg_quotient(oracle: SignOracle) -> QuotientRing:
    """The x = 1 quotient; its standard monomials are squarefree, so degree n bounds them."""
    vg = specialize(eq_ideal(oracle), 1)
    return quotient_of(vg, max(oracle.n, 0))


def chamber_point(chamber: SignVector) -> Tuple[int, ...]:
    """Values of the Heaviside functions e_i on a chamber."""
    return tuple(1 if s > 0 else 0 for s in chamber)


def vg_chamber_model(source) -> bool:
    """
    Every Varchenko-Gel'fand relation vanishes on chambers, and the quotient
    has exactly one dimension per chamber.
    """
    oracle = as_oracle(source)
    chambers = oracle.chambers()
    vg = specialize(eq_ideal(oracle), 1)
    points = [chamber_point(c) for c in chambers]
    for g, prov in zip(vg.generators, vg.provenance):
        if any(g.evaluate(p) for p in points):
            logger.warning(f"VG relation from {prov.describe()} does not vanish on chambers")
            return False
    dimension = quotient_of(vg, oracle.n).total_dimension()
    result = dimension == len(chambers)
    logger.info(f"VG chamber model: dim {dimension}, chambers {len(chambers)}")
    return result


def vg_evaluation_isomorphism(source) -> bool:
    """Evaluating the standard monomials of the x = 1 quotient on chambers is a bijection."""
    oracle = as_oracle(source)
    chambers = oracle.chambers()
    q = vg_quotient(oracle)
    monomials = [m for layer in q.standard_monomials for m in layer]
    if len(monomials) != len(chambers):
        return False
    points = [chamber_point(c) for c in chambers]
    bits = np.array(
        [[Gf2Poly(frozenset([m]), q.ring.nvars).evaluate(p) for p in points] for m in monomials],
        dtype=np.uint8,
    ).reshape(len(monomials), len(points))
    return gf2_rank(Gf2Matrix(bits)) == len(chambers)


def cone_formula_check(a: Arrangement, D: int) -> bool:
    """Hilbert function of the coned arrangement is HF_A(k) + HF_A(k-1)."""
    hf = quotient_of(eq_ideal(a), D).hilbert_function()
    hf_cone = quotient_of(eq_ideal(cone(a)), D).hilbert_function()
    expected = [hf[k] + (hf[k - 1] if k > 0 else 0) for k in range(D + 1)]
    result = hf_cone == expected
    logger.info(f"cone formula: HF(CA) {hf_cone}, expected {expected}")
    return result


def localization_check(source, D: int) -> bool:
    """
    From degree rank on, the equivariant Hilbert function counts chambers.

    Raises:
        PreconditionError: if D < rank
    """
    oracle = as_oracle(source)
    if D < oracle.rank:
        raise PreconditionError(f"localization needs D >= rank = {oracle.rank}, got {D}")
    hf = quotient_of(eq_ideal(oracle), D).hilbert_function()
    count = len(oracle.chambers())
    return all(hf[k] == count for k in range(oracle.rank, D + 1))


def coorientations(n: int) -> List[Tuple[int, ...]]:
    return list(itertools.product((1, -1), repeat=n))


def match_published_ideal(a: Arrangement, target: Sequence[Gf2Poly], find_all: bool = False,
                      show_progress: bool = False) -> Optional[Tuple[int, ...]]:
    """
    Search the 2^n coorientations for one whose equivariant ideal equals <target>.

    Args:
        a: The arrangement
        target: Generators of the ideal to match
        find_all: Keep searching and return a list of every match
        show_progress: Show a tqdm progress bar on stderr

    Returns:
        The first matching sign assignment (or all of them), None when nothing matches
    """
    goal = buchberger(target)
    matches = []
    for signs in tqdm(coorientations(a.n), desc="coorientations", disable=not show_progress):
        if buchberger(eq_ideal(recoorient(a, signs)).generators) == goal:
            logger.info(f"Coorientation {signs} matches the target ideal")
            if not find_all:
                return signs
            matches.append(signs)
    if find_all:
        return matches or None
    logger.info("No coorientation matches the target ideal")
    return None


def salvetti_cross_validation(source, D: int, equivariant: bool = True) -> Dict[str, Any]:
    """
    Build the Salvetti complex from the faces and compare it with the algebra.

    The involution must fix exactly the chambers, the GF(2) Betti numbers must
    equal the Orlik-Solomon Hilbert function, and with `equivariant` the
    truncated Borel cohomology must equal the equivariant Hilbert function
    below degree D.

    Returns:
        Dict with counts, Betti numbers, Borel dimensions and one boolean per check
    """
    oracle = as_oracle(source)
    faces = oracle.faces()
    chambers = oracle.chambers()
    poset = build_salvetti(faces)
    perm = involution(poset)
    fixed = fixed_points(poset, perm)
    complex_ = build_order_complex(poset)
    betti = homology_gf2(complex_)
    hf_os = quotient_of(os_ideal(oracle), len(betti) - 1).hilbert_function()

    result: Dict[str, Any] = {
        "faces": len(faces),
        "chambers": len(chambers),
        "elements": len(poset.elements),
        "fixed_points": len(fixed),
        "simplices": complex_.counts(),
        "betti": betti,
        "os_hf": hf_os,
        "checks": {
            "fixed_points_equal_chambers": len(fixed) == len(chambers),
            "betti_equal_os_hilbert": betti == hf_os,
            "euler_characteristic": sum((-1) ** k * b for k, b in enumerate(betti)) == euler_characteristic(complex_),
        },
    }
    if equivariant:
        borel = equivariant_cohomology_gf2(complex_, perm, D)
        hf_eq = quotient_of(eq_ideal(oracle), D).hilbert_function(D - 1)
        result["borel"] = borel
        result["eq_hf"] = hf_eq
        result["checks"]["borel_equal_eq_hilbert"] = borel == hf_eq
    logger.info(f"Salvetti cross-validation: betti {betti}, checks {result['checks']}")
    return result
