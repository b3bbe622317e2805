"""Polynomial arithmetic over GF(2), Groebner bases and graded quotient rings."""

from .groebner import buchberger, ideal_equal
from .polynomial import (
    GREVLEX,
    Gf2Poly,
    MonomialOrder,
    PolyRing,
    format_polynomial,
    linear_substitution,
    parse_polynomial,
    substitute,
)
from .quotient import QuotientRing
