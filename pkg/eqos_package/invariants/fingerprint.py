"""
Whole-ring fingerprints.

The fingerprint is the multiset of annihilator profiles over every nonzero
linear form. A graded isomorphism permutes the linear forms, so isomorphic
rings have equal fingerprints.
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..algebra.quotient import QuotientRing
from ..infra.config import load_settings
from ..infra.execution_logs import track_execution
from .annihilators import ann_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fingerprint:
    D: int
    profiles: Tuple[Tuple[int, ...], ...]  # sorted

    @property
    def size(self) -> int:
        return len(self.profiles)

    def counts(self) -> Dict[Tuple[int, ...], int]:
        return dict(sorted(Counter(self.profiles).items()))

    def difference(self, other: "Fingerprint") -> Dict[Tuple[int, ...], Tuple[int, int]]:
        """Profiles whose multiplicities differ, mapped to (self count, other count)."""
        mine = Counter(self.profiles)
        theirs = Counter(other.profiles)
        return {
            profile: (mine[profile], theirs[profile])
            for profile in sorted(set(mine) | set(theirs))
            if mine[profile] != theirs[profile]
        }


@track_execution("fingerprint")
def fingerprint(q: QuotientRing, D: int, workers: Optional[int] = None) -> Fingerprint:
    """
    Annihilator profiles of all 2^v - 1 nonzero linear forms.

    Args:
        q: A homogeneous quotient computed to degree at least D + 1
        D: Top degree of each profile
        workers: Thread count; defaults to the `fingerprint_workers` setting

    Returns:
        Fingerprint: the canonical sorted multiset
    """
    workers = workers or load_settings().fingerprint_workers
    forms = q.ring.linear_forms()

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            profiles: List[Tuple[int, ...]] = list(
                executor.map(lambda ell: ann_profile(q, ell, D).kernel_dims, forms)
            )
    else:
        profiles = [ann_profile(q, ell, D).kernel_dims for ell in forms]

    logger.info(f"Fingerprint over {len(forms)} linear forms to degree {D}")
    return Fingerprint(D, tuple(sorted(profiles)))
