from math import comb

import numpy as np
import pytest

from eqos_package.algebra.groebner import buchberger, ideal_contains, ideal_equal, reduce, spoly
from eqos_package.algebra.polynomial import (
    GREVLEX,
    Gf2Poly,
    PolyRing,
    format_polynomial,
    linear_substitution,
    parse_polynomial,
    set_variable,
    substitute,
)
from eqos_package.algebra.quotient import QuotientRing
from eqos_package.infra.errors import PolynomialParseError, PreconditionError
from eqos_package.infra.execution_logs import get_execution_logs
from eqos_package.presentations.ideals import eq_ideal


@pytest.fixture
def r1():
    return PolyRing(1)


@pytest.fixture
def r2():
    return PolyRing(2)


def p(text, ring):
    return parse_polynomial(text, ring)


# --- Polynomials ---

def test_ring_variables(r2):
    assert r2.names == ("e1", "e2", "x")
    assert r2.nvars == 3
    assert r2.x_index == 2
    assert PolyRing(2, has_x=False).names == ("e1", "e2")
    assert len(r2.linear_forms()) == 7
    with pytest.raises(ValueError):
        r2.e(3)
    with pytest.raises(ValueError):
        PolyRing(2, has_x=False).x()


def test_grevlex_variable_order(r2):
    e1, e2, x = (r2.e(1).leading_monomial(), r2.e(2).leading_monomial(), r2.x().leading_monomial())
    assert GREVLEX.key(e1) > GREVLEX.key(e2) > GREVLEX.key(x)
    # degree first, then the smallest variable loses
    assert p("e1^2+e2^2+e1*x", r2).leading_monomial() == (2, 0, 0)
    assert p("e2^2+e1*x", r2).leading_monomial() == (0, 2, 0)


def test_arithmetic_is_characteristic_two(r2):
    f = p("e1+x", r2)
    assert (f + f).is_zero()
    assert f * f == p("e1^2+x^2", r2)
    assert f - r2.x() == r2.e(1)
    assert (f ** 0) == r2.one()
    with pytest.raises(ValueError):
        f + PolyRing(3).e(1)


def test_from_monomials_cancels_pairs():
    f = Gf2Poly.from_monomials([(1, 0), (0, 1), (1, 0)], 2)
    assert f.terms == frozenset({(0, 1)})


def test_degree_and_evaluate(r2):
    f = p("e1*e2+e2*x+e1", r2)
    assert f.degree() == 2
    assert not f.is_homogeneous()
    assert r2.zero().degree() == -1
    assert f.evaluate((1, 1, 0)) == 0
    assert f.evaluate((1, 0, 0)) == 1


@pytest.mark.parametrize("text, expected", [
    ("e1*(x-e2)", "e1*e2+e1*x"),
    ("-e1+e1", "0"),
    ("e2^2 + e2*x", "e2^2+e2*x"),
    ("3*e1", "e1"),
    ("2*e1 + x", "x"),
    ("(e1+x)^2", "e1^2+x^2"),
    ("e1 − e2", "e1+e2"),
    ("1 + e1", "e1+1"),
])
def test_parse_and_format(r2, text, expected):
    assert format_polynomial(p(text, r2), r2) == expected


@pytest.mark.parametrize("text", ["e1e2", "e3", "e1+", "(e1", "e1 & e2", "e1^x", "e1*)", ""])
def test_parse_errors(r2, text):
    with pytest.raises(PolynomialParseError):
        p(text, r2)


def test_x_outside_ring():
    with pytest.raises(PolynomialParseError):
        parse_polynomial("e1*x", PolyRing(1, has_x=False))


def test_substitutions(r2):
    f = p("e1*x", r2)
    assert substitute(f, 2, p("x+e1", r2)) == p("e1*x+e1^2", r2)
    swap = linear_substitution(f, [r2.e(2), r2.e(1), r2.x()])
    assert swap == p("e2*x", r2)
    with pytest.raises(ValueError):
        linear_substitution(f, [r2.e(1)])


def test_set_variable(r1):
    f = p("e1^2+e1*x", r1)
    os_ring = PolyRing(1, has_x=False)
    assert set_variable(f, 1, 0) == p("e1^2", os_ring)
    assert set_variable(f, 1, 1) == p("e1^2+e1", os_ring)
    with pytest.raises(ValueError):
        set_variable(f, 1, 2)


# --- Groebner bases ---

def test_spoly_and_reduce(r2):
    f = p("e1^2+e1*x", r2)
    g = p("e1*e2+e2*x", r2)
    s = spoly(f, g, f.leading_monomial(), g.leading_monomial())
    assert s.is_zero()
    h = p("e1^2*e2", r2)
    assert reduce(h, [f], [f.leading_monomial()]) == p("e1*e2*x", r2)


def test_two_points_equivariant_basis(r2):
    gens = [p("e1^2+e1*x", r2), p("e2^2+e2*x", r2), p("e1*e2+e2*x", r2)]
    basis = buchberger(gens)
    assert basis == [p("e2^2+e2*x", r2), p("e1*e2+e2*x", r2), p("e1^2+e1*x", r2)]
    assert get_execution_logs("buchberger")


def test_buchberger_discards_redundant_generators():
    ring = PolyRing(2, has_x=False)
    basis = buchberger([p("e1*e2+e1", ring), p("e1*e2", ring), ring.zero(), p("e1*e2", ring)])
    assert basis == [p("e1", ring)]


def test_buchberger_unit_and_empty(r1):
    assert buchberger([p("e1+1", r1), p("e1", r1)]) == [r1.one()]
    assert buchberger([]) == []


def test_buchberger_completes_pairs(r2):
    # both new elements come from s-polynomials
    basis = buchberger([p("e1*e2+x^2", r2), p("e1^2", r2)])
    assert basis == [p("e1*e2+x^2", r2), p("e1^2", r2), p("e1*x^2", r2), p("x^4", r2)]
    for f in basis:
        others = [g for g in basis if g != f]
        assert reduce(f, others, [g.leading_monomial() for g in others]) == f


def test_ideal_equal_and_contains(r2):
    gens = [p("e1^2+e1*x", r2), p("e1*e2+e2*x", r2)]
    regrouped = [gens[0] + gens[1], gens[1]]
    assert ideal_equal(gens, regrouped)
    assert not ideal_equal(gens, gens[:1])
    assert ideal_contains(gens, p("e1^2*e2+e1*e2*x", r2))
    assert not ideal_contains(gens, r2.e(1))


# --- Quotient rings ---

def test_point_quotient(r1):
    q = QuotientRing.build([p("e1^2+e1*x", r1)], r1, 4)
    assert q.hilbert_function() == [1, 2, 2, 2, 2]
    assert q.hilbert_function(2) == [1, 2, 2]
    assert q.total_dimension() == 9
    assert q.is_homogeneous
    assert q.standard_monomials[1] == ((1, 0), (0, 1))
    assert q.contains(p("e1^2*x+e1*x^2", r1))
    assert q.normal_form(p("e1^2", r1)) == p("e1*x", r1)


def test_two_points_quotient(r2):
    gens = [p("e1^2+e1*x", r2), p("e2^2+e2*x", r2), p("e1*e2+e2*x", r2)]
    q = QuotientRing.build(gens, r2, 3)
    assert q.hilbert_function() == [1, 3, 3, 3]


def test_orlik_solomon_point():
    ring = PolyRing(1, has_x=False)
    q = QuotientRing.build([p("e1^2", ring)], ring, 2)
    assert q.hilbert_function() == [1, 1, 0]


def test_multiplication_matrices(r1):
    q = QuotientRing.build([p("e1^2+e1*x", r1)], r1, 3)
    assert q.multiplication_matrix(r1.x(), 0).bits.tolist() == [[0], [1]]
    # e1 * e1 = e1 * x in the quotient, so e1 kills e1 + x
    assert q.multiplication_matrix(r1.e(1), 1).bits.tolist() == [[1, 1], [0, 0]]
    table = q.variable_table(0, 1)
    assert q.variable_table(0, 1) is table


def test_coordinates(r1):
    q = QuotientRing.build([p("e1^2+e1*x", r1)], r1, 2)
    v = q.coordinates(p("e1*x+x^2", r1), 2)
    assert v.tolist() == [1, 1]
    assert q.from_coordinates(v, 2) == p("e1*x+x^2", r1)
    with pytest.raises(PreconditionError):
        q.coordinates(p("e1^2", r1), 2)


def test_quotient_preconditions(r1):
    q = QuotientRing.build([p("e1^2+e1*x", r1)], r1, 2)
    with pytest.raises(PreconditionError):
        q.hilbert_function(3)
    with pytest.raises(PreconditionError):
        q.multiplication_matrix(p("e1*x", r1), 0)
    with pytest.raises(PreconditionError):
        q.multiplication_matrix(r1.x(), 2)
    with pytest.raises(PreconditionError):
        QuotientRing.build([], r1, -1)
    inhomogeneous = QuotientRing.build([p("e1^2+e1", r1)], r1, 2)
    with pytest.raises(PreconditionError):
        inhomogeneous.multiplication_matrix(r1.x(), 0)


def test_unit_ideal_has_zero_quotient(r1):
    q = QuotientRing.build([r1.one()], r1, 3)
    assert q.hilbert_function() == [0, 0, 0, 0]


def random_poly(ring, rng, max_degree=3, terms=4):
    monomials = []
    for _ in range(terms):
        m = tuple(int(v) for v in rng.integers(0, 3, size=ring.nvars))
        if sum(m) <= max_degree:
            monomials.append(m)
    return Gf2Poly.from_monomials(monomials, ring.nvars)


@pytest.mark.parametrize("name", ["two_points", "three_lines"])
def test_normal_form_respects_products(request, name):
    presentation = eq_ideal(request.getfixturevalue(name))
    ring = presentation.ring
    q = QuotientRing.build(presentation.generators, ring, 4)
    rng = np.random.default_rng(5)
    for _ in range(25):
        f, g = random_poly(ring, rng), random_poly(ring, rng)
        assert q.normal_form(f * g) == q.normal_form(q.normal_form(f) * q.normal_form(g))
    assert all(q.normal_form(gen).is_zero() for gen in presentation.generators)


@pytest.mark.parametrize("n, has_x", [(1, False), (1, True), (2, True), (3, True)])
def test_free_ring_hilbert_function(n, has_x):
    ring = PolyRing(n, has_x=has_x)
    v = ring.nvars
    q = QuotientRing.build([], ring, 5)
    assert q.hilbert_function() == [comb(v + k - 1, k) for k in range(6)]


@pytest.mark.parametrize("name", ["point", "two_points", "three_lines", "boolean3"])
def test_standard_monomials_are_squarefree_in_e(request, name):
    presentation = eq_ideal(request.getfixturevalue(name))
    ring = presentation.ring
    q = QuotientRing.build(presentation.generators, ring, 5)
    for i in range(1, ring.n + 1):
        assert q.contains(ring.e(i) * (ring.x() + ring.e(i)))
    for layer in q.standard_monomials:
        for m in layer:
            assert all(e <= 1 for e in m[:ring.n])


def test_squarefree_standard_monomials_with_extra_generators():
    ring = PolyRing(3)
    gens = [ring.e(i) * (ring.x() + ring.e(i)) for i in range(1, 4)]
    gens.append(parse_polynomial("e1*e2*e3+e1*x^2", ring))
    q = QuotientRing.build(gens, ring, 5)
    for layer in q.standard_monomials:
        assert all(all(e <= 1 for e in m[:3]) for m in layer)
    # x^k is never reducible here
    assert all((0, 0, 0, k) in q.standard_monomials[k] for k in range(6))
