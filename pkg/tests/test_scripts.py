import numpy as np
import pytest

from eqos_package.geometry.arrangement import AffineForm, Arrangement, SignPair, cone
from eqos_package.geometry.faces import enumerate_faces
from eqos_package.presentations.ideals import eq_ideal
from eqos_package.presentations.oracles import GeometricOracle
from eqos_package.reports import PASS, Report
from eqos_package.scripts.corpus import (
    FACE_SWEEP_MAX_HYPERPLANES,
    MAX_COEFFICIENT,
    CorpusEntry,
    build_corpus,
    check_chamber_oracle,
    check_entry,
    check_face_sweep,
    check_groebner_permutations,
    check_reflection,
    check_salvetti,
    check_substitution_invariance,
    random_arrangement,
    random_substitution,
    run_corpus,
    salvetti_target,
    sign_pairs,
)
from eqos_package.scripts.reproduce import EXAMPLES, fixture_arrangements, reproduce, reproduce_cone
from eqos_package.core.gf2 import Gf2Matrix, gf2_rank


# --- Corpus construction ---

def test_random_arrangements_are_valid_and_seeded():
    first = [random_arrangement(np.random.default_rng(11)) for _ in range(3)]
    again = [random_arrangement(np.random.default_rng(11)) for _ in range(3)]
    assert first == again
    rng = np.random.default_rng(3)
    for _ in range(20):
        a = random_arrangement(rng)
        assert 1 <= a.n <= 6
        assert 1 <= a.dim <= 3
        assert all(abs(v) <= MAX_COEFFICIENT for f in a.forms for v in f.normal + (f.offset,))


def test_build_corpus():
    entries = build_corpus(size=3, seed=5)
    fixtures = fixture_arrangements()
    assert len(entries) == len(fixtures) + 3
    assert [e.name for e in entries[-3:]] == ["random_00", "random_01", "random_02"]
    assert {e.origin for e in entries} == {"fixture", "random"}
    assert [e.arrangement for e in build_corpus(size=3, seed=5)] == [e.arrangement for e in entries]


def test_fixture_arrangements_are_named_by_file():
    names = [name for name, _ in fixture_arrangements()]
    assert names == sorted(["boolean3", "falk_A", "falk_A_prime", "point", "three_lines", "two_points"])


# --- Property checks ---

def test_salvetti_target(point, two_points, falk_a):
    assert salvetti_target(point) == point
    assert salvetti_target(two_points) == cone(two_points)
    assert salvetti_target(falk_a) == cone(falk_a)


def test_check_salvetti(point):
    assert check_salvetti(point) is True


@pytest.mark.parametrize("name", ["point", "two_points", "three_lines"])
def test_check_entry(request, name):
    entry = CorpusEntry(name, request.getfixturevalue(name), "fixture")
    results = check_entry(entry, None, np.random.default_rng(0))
    assert set(results) >= {
        "psi", "freeness", "dimensions", "flip_invariance", "fm_certificates",
        "face_sweep", "chamber_oracle", "reflection", "salvetti",
    }
    assert all(results.values())


def test_check_entry_without_salvetti(two_points):
    results = check_entry(CorpusEntry("t", two_points, "fixture"), 2, np.random.default_rng(0), salvetti=False)
    assert "salvetti" not in results
    assert all(results.values())


@pytest.mark.parametrize("name", ["two_points", "three_lines", "boolean3", "falk_a", "falk_a_prime"])
def test_arrangement_properties(request, name):
    oracle = GeometricOracle(request.getfixturevalue(name))
    assert check_face_sweep(oracle)
    assert check_chamber_oracle(oracle)
    assert check_reflection(oracle)


def test_face_sweep_catches_a_missing_face(three_lines):
    oracle = GeometricOracle(three_lines)
    oracle._faces = [f for f in enumerate_faces(three_lines) if f != (0, 0, 0)]
    assert check_face_sweep(oracle) is False


def test_chamber_oracle_catches_a_missing_chamber(two_points):
    oracle = GeometricOracle(two_points)
    oracle._faces = [f for f in enumerate_faces(two_points) if f != (1, -1)]
    assert check_chamber_oracle(oracle) is False


def test_face_sweep_skips_large_arrangements():
    a = Arrangement(1, tuple(AffineForm((1,), k) for k in range(FACE_SWEEP_MAX_HYPERPLANES + 1)))
    assert check_face_sweep(GeometricOracle(a)) is None


def test_sign_pairs():
    pairs = sign_pairs((1, 2))
    assert len(pairs) == 9
    assert SignPair({1}, {2}) in pairs
    assert SignPair() in pairs


def test_random_substitution_is_invertible():
    rng = np.random.default_rng(4)
    images = random_substitution(4, rng)
    rows = [[1 if any(m[i] for m in img.terms) else 0 for i in range(4)] for img in images]
    assert all(img.degree() == 1 for img in images)
    assert gf2_rank(Gf2Matrix.from_rows(rows)) == 4


def test_self_checks(two_points):
    rng = np.random.default_rng(8)
    p = eq_ideal(two_points)
    assert check_groebner_permutations(p, rng, trials=4)
    assert check_substitution_invariance(p, 2, rng, trials=3)


@pytest.mark.slow
def test_run_corpus():
    report = run_corpus(size=2, seed=17)
    assert report.passed
    assert len(report.sections["arrangements"]) == len(fixture_arrangements()) + 2
    assert report.sections["fixture_rings"] == {
        "falk_J": PASS, "falk_J_prime": PASS, "vertical_A": PASS, "vertical_A_prime": PASS,
    }
    assert "salvetti" in report.verdicts


# --- Worked examples ---

def test_reproduce_cone_on_small_fixtures(point, two_points):
    report = reproduce_cone(Report(command="test"), [("point", point), ("two_points", two_points)])
    assert report.verdicts == {"cone_formula_point": PASS, "cone_formula_two_points": PASS}
    assert report.sections["cone_formula"]["point"] == "D=4 PASS"


def test_reproduce_rejects_unknown_example():
    assert EXAMPLES == ("falk", "vertical", "cone")
    with pytest.raises(ValueError):
        reproduce("nope")


@pytest.mark.slow
def test_reproduce_cone():
    report = reproduce("cone")
    assert report.passed
    assert len(report.verdicts) == len(fixture_arrangements())


@pytest.mark.slow
def test_reproduce_falk():
    report = reproduce("falk")
    assert report.sections["orlik_solomon"]["left_hf"] == [1, 5, 8, 0, 0]
    assert report.verdicts["os_hilbert_functions_equal"] == PASS
    assert report.verdicts["fingerprints_differ"] == PASS
    assert report.verdicts["distinguished"] == PASS
    assert report.passed


@pytest.mark.slow
def test_reproduce_vertical():
    report = reproduce("vertical")
    assert report.sections["annihilator_of_e2"]["kernel_dims"][0] == 2
    assert report.verdicts["distinguished"] == PASS
    assert report.passed
