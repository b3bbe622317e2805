"""
Flat-family property suite over a corpus of arrangements.

The corpus is every fixture arrangement plus seeded random arrangements with
at most six hyperplanes in dimension at most three and integer coefficients
in [-3, 3]. Each arrangement runs through the algebraic checks, the
coorientation flips, the engine self-checks and, where the complex stays
small, the Salvetti cross-validation.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..algebra.groebner import buchberger, ideal_equal
from ..algebra.polynomial import Gf2Poly, linear_substitution
from ..core.fourier_motzkin import fm_feasible, fm_solve, verify_certificate
from ..core.gf2 import Gf2Matrix, gf2_rank
from ..geometry.arrangement import (
    AffineForm,
    Arrangement,
    SignPair,
    cone,
    face_system,
    format_sign_vector,
    negate_form,
)
from ..geometry.faces import sample_chambers
from ..infra.config import load_settings
from ..infra.errors import ArrangementError
from ..invariants.fingerprint import fingerprint
from ..presentations.checks import (
    cone_formula_check,
    default_degree,
    freeness_check,
    localization_check,
    psi_check,
    quotient_of,
    salvetti_cross_validation,
    vg_chamber_model,
    vg_evaluation_isomorphism,
    vg_quotient,
)
from ..presentations.ideals import IdealPresentation, eq_ideal, flip_coorientation, os_ideal
from ..presentations.io import read_ideal_file
from ..presentations.oracles import CovectorOracle, GeometricOracle, excess_codim_from_signs
from ..reports import FAIL, PASS, Report
from . import FIXTURE_DIR
from .reproduce import fixture_arrangements

logger = logging.getLogger(__name__)

MAX_HYPERPLANES = 6
MAX_DIMENSION = 3
MAX_COEFFICIENT = 3
SALVETTI_MAX_HYPERPLANES = 6
SALVETTI_MAX_RANK = 3
SELF_CHECK_TRIALS = 10
FACE_SWEEP_MAX_HYPERPLANES = 8


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    arrangement: Arrangement
    origin: str  # "fixture" or "random"


def random_arrangement(rng: np.random.Generator, max_hyperplanes: int = MAX_HYPERPLANES,
                       max_dim: int = MAX_DIMENSION, max_coefficient: int = MAX_COEFFICIENT) -> Arrangement:
    """
    A random arrangement with integer coefficients; zero normals and repeated
    hyperplanes are redrawn. One draw in three is central.
    """
    dim = int(rng.integers(1, max_dim + 1))
    n = int(rng.integers(1, max_hyperplanes + 1))
    central = rng.integers(0, 3) == 0
    if central and dim == 1:
        # the origin is the only central hyperplane of a line
        n = 1
    while True:
        coefficients = rng.integers(-max_coefficient, max_coefficient + 1, size=(n, dim + 1))
        if central:
            coefficients[:, dim] = 0
        forms = [
            AffineForm(tuple(Fraction(int(c)) for c in row[:dim]), Fraction(int(row[dim])))
            for row in coefficients
        ]
        try:
            return Arrangement(dim, tuple(forms))
        except ArrangementError as exc:
            logger.debug(f"Redrawing random arrangement: {exc}")


def build_corpus(size: Optional[int] = None, seed: Optional[int] = None) -> List[CorpusEntry]:
    """Fixture arrangements followed by `size` random ones (defaults from settings)."""
    settings = load_settings()
    size = settings.corpus_size if size is None else size
    seed = settings.corpus_seed if seed is None else seed
    rng = np.random.default_rng(seed)
    entries = [CorpusEntry(name, a, "fixture") for name, a in fixture_arrangements()]
    for k in range(size):
        entries.append(CorpusEntry(f"random_{k:02d}", random_arrangement(rng), "random"))
    logger.info(f"Corpus: {len(entries)} arrangements ({size} random, seed {seed})")
    return entries


def check_dimensions(oracle: GeometricOracle, D: int) -> bool:
    """dim OS = dim VG = number of chambers."""
    count = len(oracle.chambers())
    os_total = quotient_of(os_ideal(oracle), max(D, oracle.rank + 1)).total_dimension()
    vg_total = vg_quotient(oracle).total_dimension()
    if not os_total == vg_total == count:
        logger.warning(f"Dimensions disagree: os {os_total}, vg {vg_total}, chambers {count}")
        return False
    return True


def check_flip_invariance(a: Arrangement, D: int, workers: Optional[int] = None) -> bool:
    """
    Flipping one hyperplane changes neither the Hilbert function nor the
    fingerprint, and regenerating the ideal agrees with substituting e_i -> x - e_i.
    """
    base = eq_ideal(a)
    q = quotient_of(base, D + 1)
    hf = q.hilbert_function(D)
    fp = fingerprint(q, D, workers=workers)
    for i in range(1, a.n + 1):
        regenerated = eq_ideal(negate_form(a, i))
        substituted = flip_coorientation(base, i)
        if not ideal_equal(regenerated.generators, substituted.generators):
            logger.warning(f"Flip {i}: regenerated ideal differs from the substituted one")
            return False
        q_flip = quotient_of(regenerated, D + 1)
        if q_flip.hilbert_function(D) != hf:
            logger.warning(f"Flip {i}: Hilbert function changed")
            return False
        if fingerprint(q_flip, D, workers=workers) != fp:
            logger.warning(f"Flip {i}: fingerprint changed")
            return False
    return True


def check_sampling(oracle: GeometricOracle) -> bool:
    return sample_chambers(oracle.arrangement) <= set(oracle.chambers())


def check_sign_oracle(oracle: GeometricOracle) -> bool:
    """
    Excess codimension read from sign regions agrees with the rank test, and
    for central arrangements the covector oracle rebuilds the same ideal.
    """
    n = oracle.n
    for mask in range(1, 1 << n):
        subset = frozenset(i + 1 for i in range(n) if mask >> i & 1)
        if len(subset) > oracle.rank + 1 or oracle.intersection_empty(subset):
            continue
        if excess_codim_from_signs(oracle, subset) != oracle.excess_codim(subset):
            logger.warning(f"Sign-based excess codimension disagrees on {sorted(subset)}")
            return False
    if oracle.arrangement.is_central:
        abstract = CovectorOracle(oracle.faces())
        if not ideal_equal(eq_ideal(abstract).generators, eq_ideal(oracle).generators):
            logger.warning("Covector oracle builds a different equivariant ideal")
            return False
    return True


def check_groebner_permutations(p: IdealPresentation, rng: np.random.Generator,
                                trials: int = SELF_CHECK_TRIALS) -> bool:
    reference = buchberger(p.generators)
    for _ in range(trials):
        order = rng.permutation(len(p.generators))
        if buchberger([p.generators[int(k)] for k in order]) != reference:
            return False
    return True


def check_fm_certificates(oracle: GeometricOracle, rng: np.random.Generator,
                          trials: int = SELF_CHECK_TRIALS) -> bool:
    """Certificates for every face and for random sign vectors pass the independent verifier."""
    a = oracle.arrangement
    systems = [face_system(a, face) for face in oracle.faces()]
    for _ in range(trials):
        signs = tuple(int(s) for s in rng.integers(-1, 2, size=a.n))
        systems.append(face_system(a, signs))
    return all(verify_certificate(system, fm_solve(system)) for system in systems)


def check_face_sweep(oracle: GeometricOracle) -> Optional[bool]:
    """Every sign vector in {+,0,-}^n has a feasible region exactly when it is an enumerated face."""
    a = oracle.arrangement
    if a.n > FACE_SWEEP_MAX_HYPERPLANES:
        return None
    faces = set(oracle.faces())
    for signs in itertools.product((1, -1, 0), repeat=a.n):
        if fm_feasible(face_system(a, signs)) != (signs in faces):
            logger.warning(f"Face sweep disagrees on {format_sign_vector(signs)}")
            return False
    return True


def sign_pairs(indices) -> List[SignPair]:
    """All (S+, S-) with S+ and S- disjoint subsets of `indices`."""
    pairs = []
    for signs in itertools.product((0, 1, -1), repeat=len(indices)):
        plus = frozenset(i for i, s in zip(indices, signs) if s == 1)
        minus = frozenset(i for i, s in zip(indices, signs) if s == -1)
        pairs.append(SignPair(plus, minus))
    return pairs


def check_chamber_oracle(oracle: GeometricOracle) -> bool:
    """An open sign region is empty iff no chamber has those signs."""
    found = oracle.chambers()
    for sp in sign_pairs(range(1, oracle.n + 1)):
        hit = any(
            all(c[i - 1] == 1 for i in sp.plus) and all(c[j - 1] == -1 for j in sp.minus) for c in found
        )
        if oracle.sign_region_empty(sp) == hit:
            logger.warning(f"Chamber oracle disagrees on {sp}")
            return False
    return True


def check_reflection(oracle: GeometricOracle) -> bool:
    """
    Through a point of a nonempty intersection of S, reflection swaps sides:
    an empty region (S+, S-) on S forces (S-, S+) to be empty too.
    """
    n = oracle.n
    for mask in range(1, 1 << n):
        subset = tuple(i + 1 for i in range(n) if mask >> i & 1)
        if oracle.intersection_empty(frozenset(subset)):
            continue
        for sp in sign_pairs(subset):
            if sp.support != frozenset(subset):
                continue
            if oracle.sign_region_empty(sp) and not oracle.sign_region_empty(sp.swapped()):
                logger.warning(f"Reflection through the intersection of {list(subset)} fails for {sp}")
                return False
    return True


def salvetti_target(a: Arrangement) -> Optional[Arrangement]:
    """The central arrangement whose Salvetti complex is small enough to check, if any."""
    target = a if a.is_central else cone(a)
    if target.n <= SALVETTI_MAX_HYPERPLANES and target.rank <= SALVETTI_MAX_RANK:
        return target
    return None


def check_salvetti(a: Arrangement) -> Optional[bool]:
    target = salvetti_target(a)
    if target is None:
        return None
    oracle = GeometricOracle(target)
    result = salvetti_cross_validation(oracle, default_degree(target.rank), equivariant=True)
    return all(result["checks"].values())


def random_substitution(nvars: int, rng: np.random.Generator) -> List[Gf2Poly]:
    """Images of the variables under a random invertible linear change of variables."""
    while True:
        matrix = rng.integers(0, 2, size=(nvars, nvars), dtype=np.uint8)
        if gf2_rank(Gf2Matrix(matrix)) == nvars:
            break
    images = []
    for row in matrix:
        monomials = [tuple(1 if j == i else 0 for j in range(nvars)) for i in range(nvars) if row[i]]
        images.append(Gf2Poly.from_monomials(monomials, nvars))
    return images


def check_substitution_invariance(p: IdealPresentation, D: int, rng: np.random.Generator,
                                  trials: int = SELF_CHECK_TRIALS, workers: Optional[int] = None) -> bool:
    """The fingerprint is unchanged by graded changes of variables."""
    reference = fingerprint(quotient_of(p, D + 1), D, workers=workers)
    for _ in range(trials):
        images = random_substitution(p.ring.nvars, rng)
        generators = [linear_substitution(g, images) for g in p.generators]
        q = quotient_of(IdealPresentation(p.ring, tuple(generators), p.provenance, p.label), D + 1)
        if fingerprint(q, D, workers=workers) != reference:
            return False
    return True


def check_entry(entry: CorpusEntry, degree: Optional[int], rng: np.random.Generator,
                salvetti: bool = True, workers: Optional[int] = None) -> Dict[str, Optional[bool]]:
    """Every property for one arrangement; None marks a property that does not apply."""
    a = entry.arrangement
    oracle = GeometricOracle(a)
    D = default_degree(a.rank) if degree is None else max(degree, a.rank + 1)
    checks: List[Tuple[str, Callable[[], Optional[bool]]]] = [
        ("psi", lambda: psi_check(oracle)),
        ("freeness", lambda: freeness_check(oracle, D)),
        ("dimensions", lambda: check_dimensions(oracle, D)),
        ("vg_chamber_model", lambda: vg_chamber_model(oracle)),
        ("vg_evaluation", lambda: vg_evaluation_isomorphism(oracle)),
        ("localization", lambda: localization_check(oracle, D)),
        ("cone_formula", lambda: cone_formula_check(a, D)),
        ("flip_invariance", lambda: check_flip_invariance(a, D, workers)),
        ("sampling", lambda: check_sampling(oracle)),
        ("sign_oracle", lambda: check_sign_oracle(oracle)),
        ("groebner_permutations", lambda: check_groebner_permutations(eq_ideal(oracle), rng)),
        ("fm_certificates", lambda: check_fm_certificates(oracle, rng)),
        ("face_sweep", lambda: check_face_sweep(oracle)),
        ("chamber_oracle", lambda: check_chamber_oracle(oracle)),
        ("reflection", lambda: check_reflection(oracle)),
    ]
    if salvetti:
        checks.append(("salvetti", lambda: check_salvetti(a)))

    results: Dict[str, Optional[bool]] = {}
    for name, check in checks:
        results[name] = check()
        if results[name] is False:
            logger.warning(f"{entry.name}: property {name} failed")
    return results


def run_corpus(size: Optional[int] = None, seed: Optional[int] = None, degree: Optional[int] = None,
               skip_salvetti: bool = False, show_progress: bool = False,
               workers: Optional[int] = None) -> Report:
    """
    Run the property suite and fold the results into a report.

    Returns:
        Report: one line per arrangement, one verdict per property
    """
    settings = load_settings()
    seed = settings.corpus_seed if seed is None else seed
    entries = build_corpus(size, seed)
    rng = np.random.default_rng(seed + 1)
    report = Report(command="corpus" + (" --skip-salvetti" if skip_salvetti else ""))
    report.degree = degree
    report.note(f"seed {seed}; {len(entries)} arrangements")
    if not skip_salvetti:
        report.note(
            f"Salvetti cross-validation on central members (affine members coned) "
            f"with at most {SALVETTI_MAX_HYPERPLANES} hyperplanes and rank at most {SALVETTI_MAX_RANK}"
        )

    totals: Dict[str, List[bool]] = {}
    section = report.section("arrangements")
    for entry in tqdm(entries, desc="corpus", disable=not show_progress):
        results = check_entry(entry, degree, rng, salvetti=not skip_salvetti, workers=workers)
        failed = [name for name, passed in results.items() if passed is False]
        a = entry.arrangement
        summary = f"{entry.origin} n={a.n} d={a.dim} rank={a.rank} central={a.is_central}"
        section[entry.name] = f"{summary} {FAIL + ' ' + ','.join(failed) if failed else PASS}"
        for name, passed in results.items():
            if passed is not None:
                totals.setdefault(name, []).append(passed)

    rings = report.section("fixture_rings")
    for path in sorted(FIXTURE_DIR.glob("*.ideal")):
        p = read_ideal_file(path)
        D = 4 if degree is None else degree
        passed = check_substitution_invariance(p, D, rng, workers=workers)
        rings[path.stem] = PASS if passed else FAIL
        totals.setdefault("substitution_invariance", []).append(passed)

    counts = report.section("properties")
    for name, outcomes in totals.items():
        counts[name] = f"{sum(outcomes)}/{len(outcomes)}"
        report.verdict(name, all(outcomes))
    return report
