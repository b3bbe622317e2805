"""
Compare two graded rings with a fixed ladder of invariants.

The ladder stops at the first invariant that differs: Hilbert function,
then fingerprint, then the number of linear forms whose annihilator is
generated by two linear forms. Agreement on every rung says nothing about
isomorphism.
"""

import logging
from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel

from ..algebra.polynomial import format_polynomial
from ..algebra.quotient import QuotientRing
from ..infra.errors import PreconditionError
from .annihilators import linear_annihilator_forms
from .fingerprint import fingerprint

logger = logging.getLogger(__name__)

NO_SEPARATION_NOTE = "no implemented invariant separates these rings"


class Verdict(str, Enum):
    DISTINGUISHED = "DISTINGUISHED"
    NOT_DISTINGUISHED = "NOT-DISTINGUISHED"


class Certificate(BaseModel):
    kind: str
    left: Any
    right: Any
    description: str = ""


class Distinction(BaseModel):
    verdict: Verdict
    degree: int
    certificate: Optional[Certificate] = None
    note: str = ""


def _profile_key(profile) -> str:
    return ",".join(str(v) for v in profile)


def distinguish(q1: QuotientRing, q2: QuotientRing, D: int, workers: Optional[int] = None) -> Distinction:
    """
    Run the invariant ladder on two quotients computed to degree at least D + 1.

    Raises:
        PreconditionError: if the rings have different variable counts
    """
    if q1.ring.nvars != q2.ring.nvars:
        raise PreconditionError(f"rings have {q1.ring.nvars} and {q2.ring.nvars} variables")

    hf1, hf2 = q1.hilbert_function(D), q2.hilbert_function(D)
    if hf1 != hf2:
        logger.info(f"Hilbert functions differ: {hf1} vs {hf2}")
        return Distinction(
            verdict=Verdict.DISTINGUISHED,
            degree=D,
            certificate=Certificate(kind="hilbert_function", left=hf1, right=hf2,
                                    description="Hilbert functions differ"),
        )

    fp1, fp2 = fingerprint(q1, D, workers), fingerprint(q2, D, workers)
    if fp1 != fp2:
        diff = fp1.difference(fp2)
        logger.info(f"Fingerprints differ in {len(diff)} profiles")
        return Distinction(
            verdict=Verdict.DISTINGUISHED,
            degree=D,
            certificate=Certificate(
                kind="fingerprint",
                left={_profile_key(p): counts[0] for p, counts in diff.items()},
                right={_profile_key(p): counts[1] for p, counts in diff.items()},
                description="annihilator profile multiplicities differ",
            ),
        )

    forms1, forms2 = linear_annihilator_forms(q1, D), linear_annihilator_forms(q2, D)
    if len(forms1) != len(forms2):
        logger.info(f"Linear-annihilator form counts differ: {len(forms1)} vs {len(forms2)}")
        return Distinction(
            verdict=Verdict.DISTINGUISHED,
            degree=D,
            certificate=Certificate(
                kind="linear_annihilator",
                left=[_describe(q1, ell, pair) for ell, pair in forms1],
                right=[_describe(q2, ell, pair) for ell, pair in forms2],
                description="number of linear forms whose annihilator is generated by two linear forms",
            ),
        )

    return Distinction(verdict=Verdict.NOT_DISTINGUISHED, degree=D, note=NO_SEPARATION_NOTE)


def _describe(q: QuotientRing, ell, pair) -> str:
    ring = q.ring
    return f"Ann({format_polynomial(ell, ring)}) = <{format_polynomial(pair[0], ring)}, {format_polynomial(pair[1], ring)}>"
