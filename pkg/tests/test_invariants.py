import itertools

import pytest

from eqos_package.algebra.polynomial import PolyRing, linear_substitution, parse_polynomial
from eqos_package.algebra.quotient import QuotientRing
from eqos_package.infra.errors import PreconditionError
from eqos_package.invariants.annihilators import (
    ann_generated_by,
    ann_linear_generators,
    ann_profile,
    degree_one_kernel,
    linear_annihilator_forms,
)
from eqos_package.invariants.distinguish import NO_SEPARATION_NOTE, Verdict, distinguish
from eqos_package.invariants.fingerprint import fingerprint
from eqos_package.presentations.ideals import eq_ideal, flip_coorientation


@pytest.fixture
def ring():
    return PolyRing(1)


def quotient(texts, ring, bound=3):
    return QuotientRing.build([parse_polynomial(t, ring) for t in texts], ring, bound)


@pytest.fixture
def point_ring(ring):
    """Equivariant ring of a single point: e1 * (x - e1) = 0."""
    return quotient(["e1*(x-e1)"], ring)


@pytest.fixture
def square_ring(ring):
    return quotient(["e1^2"], ring)


@pytest.fixture
def split_ring():
    """x kills e1 and e2 and nothing else."""
    r = PolyRing(2)
    return quotient(["e1*x", "e2*x"], r)


# --- Annihilators ---

def test_ann_profile(point_ring, ring):
    assert ann_profile(point_ring, ring.e(1), 2).kernel_dims == (1, 1)
    assert ann_profile(point_ring, ring.x(), 2).kernel_dims == (0, 0)
    assert ann_profile(point_ring, ring.e(1) + ring.x(), 2).kernel_dims == (1, 1)


def test_ann_profile_preconditions(point_ring, ring):
    with pytest.raises(PreconditionError):
        ann_profile(point_ring, ring.e(1), 3)
    with pytest.raises(PreconditionError):
        ann_profile(point_ring, ring.e(1) * ring.x(), 2)
    with pytest.raises(PreconditionError):
        ann_profile(point_ring, ring.zero(), 2)


def test_degree_one_kernel(point_ring, ring):
    assert degree_one_kernel(point_ring, ring.e(1)) == [ring.e(1) + ring.x()]


def test_ann_generated_by(point_ring, ring):
    assert ann_generated_by(point_ring, ring.e(1), [ring.e(1) + ring.x()], 2)
    # x does not kill e1
    assert not ann_generated_by(point_ring, ring.e(1), [ring.x()], 2)
    # an empty list misses the kernel in degree 1
    assert not ann_generated_by(point_ring, ring.e(1), [], 2)


def test_two_linear_generators(split_ring):
    r = split_ring.ring
    assert ann_linear_generators(split_ring, r.x(), 2) == (r.e(1), r.e(2))
    assert ann_linear_generators(split_ring, r.e(1), 2) is None
    assert linear_annihilator_forms(split_ring, 2) == [(r.x(), (r.e(1), r.e(2)))]


def test_no_linear_generators_for_a_point(point_ring):
    assert linear_annihilator_forms(point_ring, 2) == []


# --- Fingerprints ---

def test_fingerprint(point_ring):
    fp = fingerprint(point_ring, 2)
    assert fp.size == 3
    assert fp.profiles == ((0, 0), (1, 1), (1, 1))
    assert fp.counts() == {(0, 0): 1, (1, 1): 2}


def test_fingerprint_difference(point_ring, square_ring):
    fp = fingerprint(point_ring, 2)
    other = fingerprint(square_ring, 2)
    assert other.profiles == ((0, 0), (0, 0), (1, 1))
    assert fp.difference(other) == {(0, 0): (1, 2), (1, 1): (2, 1)}
    assert fp.difference(fp) == {}


def test_fingerprint_workers_agree(split_ring):
    assert fingerprint(split_ring, 2, workers=3) == fingerprint(split_ring, 2, workers=1)


# --- Distinguishing ladder ---

def test_distinguish_by_hilbert_function(ring, square_ring):
    other = quotient(["e1^2", "e1*x"], ring)
    result = distinguish(square_ring, other, 2)
    assert result.verdict == Verdict.DISTINGUISHED
    assert result.certificate.kind == "hilbert_function"
    assert result.certificate.left == [1, 2, 2]
    assert result.certificate.right == [1, 2, 1]


def test_distinguish_by_fingerprint(point_ring, square_ring):
    result = distinguish(point_ring, square_ring, 2)
    assert result.verdict == Verdict.DISTINGUISHED
    assert result.certificate.kind == "fingerprint"
    assert result.certificate.left == {"0,0": 1, "1,1": 2}
    assert result.certificate.right == {"0,0": 2, "1,1": 1}


def test_isomorphic_rings_are_not_distinguished(ring, point_ring):
    # the same relation, expanded
    twin = quotient(["e1^2+e1*x"], ring)
    result = distinguish(point_ring, twin, 2)
    assert result.verdict == Verdict.NOT_DISTINGUISHED
    assert result.certificate is None
    assert result.note == NO_SEPARATION_NOTE


def test_distinguish_needs_matching_rings(point_ring, split_ring):
    with pytest.raises(PreconditionError):
        distinguish(point_ring, split_ring, 2)


@pytest.mark.parametrize("left, right", [
    (["e1*(x-e1)"], ["e1^2"]),
    (["e1^2"], ["e1^2", "e1*x"]),
    (["e1*(x-e1)"], ["e1^2+e1*x"]),
])
def test_distinguish_is_symmetric(ring, left, right):
    q1, q2 = quotient(left, ring), quotient(right, ring)
    forward, backward = distinguish(q1, q2, 2), distinguish(q2, q1, 2)
    assert forward.verdict == backward.verdict
    if forward.certificate is None:
        assert backward.certificate is None
    else:
        assert forward.certificate.kind == backward.certificate.kind
        assert forward.certificate.left == backward.certificate.right
        assert forward.certificate.right == backward.certificate.left


# --- Invariance under ring isomorphisms ---

def three_lines_quotient(generators, ring):
    return QuotientRing.build(generators, ring, 4)


def test_fingerprint_ignores_the_labelling_of_hyperplanes(three_lines):
    presentation = eq_ideal(three_lines)
    ring = presentation.ring
    reference = fingerprint(three_lines_quotient(presentation.generators, ring), 3)
    for perm in itertools.permutations(range(1, 4)):
        images = [ring.e(i) for i in perm] + [ring.x()]
        generators = [linear_substitution(g, images) for g in presentation.generators]
        assert fingerprint(three_lines_quotient(generators, ring), 3) == reference


def test_fingerprint_survives_coorientation_flips(three_lines):
    presentation = eq_ideal(three_lines)
    ring = presentation.ring
    reference = fingerprint(three_lines_quotient(presentation.generators, ring), 3)
    for i in range(1, 4):
        flipped = flip_coorientation(presentation, i)
        assert fingerprint(three_lines_quotient(flipped.generators, ring), 3) == reference


def test_profiles_stay_within_hilbert_bounds_after_adding_a_generator(three_lines):
    presentation = eq_ideal(three_lines)
    ring = presentation.ring
    small = three_lines_quotient(presentation.generators, ring)
    big = three_lines_quotient(list(presentation.generators) + [parse_polynomial("e1*x+x^2", ring)], ring)
    hf_small, hf_big = small.hilbert_function(), big.hilbert_function()
    assert all(b <= s for b, s in zip(hf_big, hf_small))
    for ell in ring.linear_forms():
        dims = ann_profile(big, ell, 3).kernel_dims
        for k, dim in enumerate(dims, start=1):
            assert hf_big[k] - hf_big[k + 1] <= dim <= hf_big[k]
