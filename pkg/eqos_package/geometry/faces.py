"""
Face and chamber enumeration for real arrangements.

Faces are the nonempty sign regions {p : sign(omega_i(p)) = sigma_i for all i}.
They are found by extending partial sign vectors hyperplane by hyperplane in
the order given, branching (+, -, 0) and pruning every prefix whose region is
already empty.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Set

import numpy as np

from ..core.fourier_motzkin import fm_feasible
from ..infra.config import load_settings
from ..infra.execution_logs import track_execution
from .arrangement import Arrangement, SignVector, face_system, sign_vector_of

logger = logging.getLogger(__name__)

_BRANCH_ORDER = (1, -1, 0)

_BOX = 10
_MAX_DENOMINATOR = 16


@track_execution("enumerate_faces")
def enumerate_faces(a: Arrangement) -> List[SignVector]:
    """
    All realizable sign vectors of the arrangement, in depth-first order.

    Args:
        a: The arrangement

    Returns:
        List[SignVector]: every face, each exactly once
    """
    faces: List[SignVector] = []
    stack: List[SignVector] = [()]
    while stack:
        prefix = stack.pop()
        if len(prefix) == a.n:
            faces.append(prefix)
            continue
        # Pushed in reverse so the first branch is explored first.
        for sign in reversed(_BRANCH_ORDER):
            candidate = prefix + (sign,)
            if fm_feasible(face_system(a, candidate)):
                stack.append(candidate)
    logger.info(f"Enumerated {len(faces)} faces of an arrangement with n={a.n}, d={a.dim}")
    return faces


def chambers(a: Arrangement, faces: Optional[List[SignVector]] = None) -> List[SignVector]:
    if faces is None:
        faces = enumerate_faces(a)
    return [f for f in faces if all(s != 0 for s in f)]


def sample_chambers(a: Arrangement, samples: Optional[int] = None, seed: Optional[int] = None) -> Set[SignVector]:
    """
    Chamber sign vectors observed at random rational points of [-10, 10]^d.

    Points are drawn with small random denominators; a point that happens to
    lie on a hyperplane is discarded. Only containment in the enumerated
    chamber set can be validated this way, never completeness.
    """
    settings = load_settings()
    samples = settings.sample_points if samples is None else samples
    seed = settings.sample_seed if seed is None else seed
    rng = np.random.default_rng(seed)

    observed: Set[SignVector] = set()
    if samples == 0:
        return observed
    denominators = rng.integers(1, _MAX_DENOMINATOR + 1, size=(samples, a.dim))
    numerators = rng.integers(-_BOX, _BOX + 1, size=(samples, a.dim)) * denominators
    numerators += rng.integers(-_MAX_DENOMINATOR + 1, _MAX_DENOMINATOR, size=(samples, a.dim)) % denominators
    for row_num, row_den in zip(numerators, denominators):
        point = [Fraction(int(p), int(q)) for p, q in zip(row_num, row_den)]
        point = [min(max(v, Fraction(-_BOX)), Fraction(_BOX)) for v in point]
        signs = sign_vector_of(a, point)
        if all(s != 0 for s in signs):
            observed.add(signs)
    logger.debug(f"Sampling saw {len(observed)} chambers from {samples} points")
    return observed
