"""
Polynomials over GF(2) in e_1, ..., e_n and optionally x.

A monomial is a tuple of exponents with x (when present) in the last slot.
A polynomial is the frozenset of its monomials: every coefficient is 1, and
addition is symmetric difference.
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..infra.errors import PolynomialParseError

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class PolyRing:
    """GF(2)[e1..en] or GF(2)[e1..en, x]."""
    n: int
    has_x: bool = True

    @property
    def nvars(self) -> int:
        return self.n + (1 if self.has_x else 0)

    @property
    def names(self) -> Tuple[str, ...]:
        names = tuple(f"e{i}" for i in range(1, self.n + 1))
        return names + ("x",) if self.has_x else names

    @property
    def x_index(self) -> Optional[int]:
        return self.n if self.has_x else None

    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def unit_monomial(self, index: int) -> Monomial:
        m = [0] * self.nvars
        m[index] = 1
        return tuple(m)

    def zero(self) -> "Gf2Poly":
        return Gf2Poly(frozenset(), self.nvars)

    def one(self) -> "Gf2Poly":
        return Gf2Poly(frozenset([self.one_monomial()]), self.nvars)

    def var(self, index: int) -> "Gf2Poly":
        """The variable in slot `index` (0-based; x is slot n)."""
        return Gf2Poly(frozenset([self.unit_monomial(index)]), self.nvars)

    def e(self, i: int) -> "Gf2Poly":
        if not 1 <= i <= self.n:
            raise ValueError(f"e{i} is not a variable of a ring with n={self.n}")
        return self.var(i - 1)

    def x(self) -> "Gf2Poly":
        if not self.has_x:
            raise ValueError("ring has no x variable")
        return self.var(self.n)

    def without_x(self) -> "PolyRing":
        return PolyRing(self.n, has_x=False)

    def linear_forms(self) -> List["Gf2Poly"]:
        """All nonzero degree-1 forms, ordered by their bitmask over the variables."""
        forms = []
        for mask in range(1, 1 << self.nvars):
            terms = frozenset(self.unit_monomial(i) for i in range(self.nvars) if mask >> i & 1)
            forms.append(Gf2Poly(terms, self.nvars))
        return forms


@dataclass(frozen=True)
class MonomialOrder:
    """
    Graded reverse lexicographic order with e1 > e2 > ... > en > x.

    Keys compare with Python tuple ordering; a larger key is a larger monomial.
    """
    name: str = "grevlex"

    def key(self, m: Monomial) -> Tuple:
        return (sum(m), tuple(-e for e in reversed(m)))


GREVLEX = MonomialOrder()


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class Gf2Poly:
    terms: FrozenSet[Monomial]
    nvars: int

    def __post_init__(self):
        object.__setattr__(self, "terms", frozenset(self.terms))
        for m in self.terms:
            if len(m) != self.nvars:
                raise ValueError(f"monomial {m} does not have {self.nvars} exponents")

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial], nvars: int) -> "Gf2Poly":
        """Sum of the monomials; repeated monomials cancel in pairs."""
        terms = set()
        for m in monomials:
            terms ^= {tuple(m)}
        return cls(frozenset(terms), nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def _check(self, other: "Gf2Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"polynomials live in rings with {self.nvars} and {other.nvars} variables")

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        self._check(other)
        return Gf2Poly(self.terms ^ other.terms, self.nvars)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        self._check(other)
        product = set()
        for a in self.terms:
            for b in other.terms:
                product ^= {monomial_mul(a, b)}
        return Gf2Poly(frozenset(product), self.nvars)

    def __pow__(self, k: int) -> "Gf2Poly":
        result = Gf2Poly(frozenset([(0,) * self.nvars]), self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def mul_monomial(self, m: Monomial) -> "Gf2Poly":
        return Gf2Poly(frozenset(monomial_mul(t, m) for t in self.terms), self.nvars)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> List[Monomial]:
        return sorted(self.terms, key=order.key, reverse=True)

    def evaluate(self, point: Sequence[int]) -> int:
        """Value in GF(2) at a 0/1 point."""
        value = 0
        for m in self.terms:
            if all(point[i] for i, e in enumerate(m) if e):
                value ^= 1
        return value


def substitute(poly: Gf2Poly, index: int, replacement: Gf2Poly) -> Gf2Poly:
    """Replace the variable in slot `index` by `replacement`."""
    images = []
    for i in range(poly.nvars):
        if i == index:
            images.append(replacement)
        else:
            m = [0] * poly.nvars
            m[i] = 1
            images.append(Gf2Poly(frozenset([tuple(m)]), poly.nvars))
    return linear_substitution(poly, images)


def linear_substitution(poly: Gf2Poly, images: Sequence[Gf2Poly]) -> Gf2Poly:
    """
    Apply the ring map sending variable i to images[i].

    All images must live in one common ring; the result lives there too.
    """
    if len(images) != poly.nvars:
        raise ValueError(f"expected {poly.nvars} images, got {len(images)}")
    target = images[0].nvars if images else poly.nvars
    one = Gf2Poly(frozenset([(0,) * target]), target)
    powers: Dict[Tuple[int, int], Gf2Poly] = {}

    def power(i: int, k: int) -> Gf2Poly:
        if k == 0:
            return one
        if (i, k) not in powers:
            powers[(i, k)] = power(i, k - 1) * images[i]
        return powers[(i, k)]

    result = Gf2Poly(frozenset(), target)
    for m in poly.terms:
        term = one
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def set_variable(poly: Gf2Poly, index: int, value: int) -> Gf2Poly:
    """Evaluate one variable at 0 or 1 and drop it from the ring."""
    if value not in (0, 1):
        raise ValueError(f"GF(2) value must be 0 or 1, got {value}")
    terms = set()
    for m in poly.terms:
        if m[index] and value == 0:
            continue
        terms ^= {m[:index] + m[index + 1:]}
    return Gf2Poly(frozenset(terms), poly.nvars - 1)


# ---------------------------------------------------------------------------
# Text syntax
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(e)(\d+)|(x)|(\d+)|([()+*^-]))")


def _tokenize(text: str) -> List[Tuple[str, str]]:
    text = text.replace("−", "-")
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise PolynomialParseError(f"unexpected character {text[pos:].strip()[0]!r} in {text.strip()!r}")
        e, index, x, number, op = match.groups()
        if e:
            tokens.append(("var", index))
        elif x:
            tokens.append(("x", x))
        elif number:
            tokens.append(("num", number))
        else:
            tokens.append(("op", op))
        pos = match.end()
    return tokens


class _Parser:
    """Recursive descent: sum := product (('+'|'-') product)*; product := power ('*' power)*."""

    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Optional[Tuple[str, str]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Tuple[str, str]:
        token = self.peek()
        if token is None:
            raise PolynomialParseError(f"unexpected end of {self.text.strip()!r}")
        self.pos += 1
        return token

    def parse(self) -> Gf2Poly:
        poly = self.sum()
        if self.peek() is not None:
            raise PolynomialParseError(f"unexpected {self.peek()[1]!r} in {self.text.strip()!r}")
        return poly

    def sum(self) -> Gf2Poly:
        if self.peek() == ("op", "-"):
            self.take()
        poly = self.product()
        while self.peek() in (("op", "+"), ("op", "-")):
            self.take()
            poly = poly + self.product()
        return poly

    def product(self) -> Gf2Poly:
        poly = self.power()
        while self.peek() == ("op", "*"):
            self.take()
            poly = poly * self.power()
        return poly

    def power(self) -> Gf2Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, value = self.take()
            if kind != "num":
                raise PolynomialParseError(f"exponent must be a number in {self.text.strip()!r}")
            return base ** int(value)
        return base

    def atom(self) -> Gf2Poly:
        kind, value = self.take()
        if kind == "var":
            i = int(value)
            if not 1 <= i <= self.ring.n:
                raise PolynomialParseError(f"e{i} is outside e1..e{self.ring.n}")
            return self.ring.e(i)
        if kind == "x":
            if not self.ring.has_x:
                raise PolynomialParseError(f"x is not a variable of this ring in {self.text.strip()!r}")
            return self.ring.x()
        if kind == "num":
            return self.ring.one() if int(value) % 2 else self.ring.zero()
        if value == "(":
            inner = self.sum()
            if self.take() != ("op", ")"):
                raise PolynomialParseError(f"missing ')' in {self.text.strip()!r}")
            return inner
        raise PolynomialParseError(f"unexpected {value!r} in {self.text.strip()!r}")


def parse_polynomial(text: str, ring: PolyRing) -> Gf2Poly:
    """
    Parse the polynomial syntax, e.g. "e3*e4+e3*e5+e4*e5+e4*x" or "e1*(x-e2)".

    '-' is read as '+' (characteristic 2).

    Raises:
        PolynomialParseError: on any malformed input
    """
    return _Parser(text, ring).parse()


def format_monomial(m: Monomial, ring: PolyRing) -> str:
    factors = []
    for name, e in zip(ring.names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def format_polynomial(poly: Gf2Poly, ring: PolyRing, order: MonomialOrder = GREVLEX) -> str:
    if poly.is_zero():
        return "0"
    return "+".join(format_monomial(m, ring) for m in poly.sorted_terms(order))
