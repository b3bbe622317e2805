"""
Graded quotient rings GF(2)[vars]/J truncated at a degree bound.

The standard monomials (those not divisible by any leading monomial of the
reduced Groebner basis) form a GF(2)-basis of the quotient. They are an order
ideal, so each degree is generated from the previous one by multiplying with
single variables.
"""

import logging
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.gf2 import Gf2Matrix
from ..infra.errors import PreconditionError
from .groebner import buchberger, reduce
from .polynomial import GREVLEX, Gf2Poly, Monomial, MonomialOrder, PolyRing, monomial_divides, monomial_mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientRing:
    ring: PolyRing
    groebner: Tuple[Gf2Poly, ...]
    degree_bound: int
    standard_monomials: Tuple[Tuple[Monomial, ...], ...]
    order: MonomialOrder = GREVLEX
    _index: Tuple[Dict[Monomial, int], ...] = field(default=(), compare=False, repr=False)
    _tables: Dict[Tuple[int, int], Gf2Matrix] = field(default_factory=dict, compare=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, compare=False, repr=False)

    @classmethod
    def build(cls, gens: Sequence[Gf2Poly], ring: PolyRing, degree_bound: int,
              order: MonomialOrder = GREVLEX) -> "QuotientRing":
        """
        Compute the reduced Groebner basis of `gens` and the standard monomials
        of every degree 0..degree_bound.
        """
        if degree_bound < 0:
            raise PreconditionError(f"degree bound must be nonnegative, got {degree_bound}")
        basis = tuple(buchberger(gens, order))
        lms = [g.leading_monomial(order) for g in basis]

        def standard(m: Monomial) -> bool:
            return not any(monomial_divides(lm, m) for lm in lms)

        one = ring.one_monomial()
        current = [one] if standard(one) else []
        layers = [tuple(current)]
        units = [ring.unit_monomial(i) for i in range(ring.nvars)]
        for _ in range(degree_bound):
            candidates = {monomial_mul(m, u) for m in current for u in units}
            current = sorted((m for m in candidates if standard(m)), key=order.key, reverse=True)
            layers.append(tuple(current))

        index = tuple({m: j for j, m in enumerate(layer)} for layer in layers)
        q = cls(ring, basis, degree_bound, tuple(layers), order, _index=index)
        logger.debug(f"Quotient ring: basis size {len(basis)}, HF {q.hilbert_function()}")
        return q

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.groebner)

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.groebner]

    def normal_form(self, f: Gf2Poly) -> Gf2Poly:
        return reduce(f, self.groebner, self.leading_monomials(), self.order)

    def contains(self, f: Gf2Poly) -> bool:
        """Ideal membership."""
        return self.normal_form(f).is_zero()

    def hilbert_function(self, D: Optional[int] = None) -> List[int]:
        D = self.degree_bound if D is None else D
        if D > self.degree_bound:
            raise PreconditionError(f"degree {D} exceeds the quotient's degree bound {self.degree_bound}")
        return [len(layer) for layer in self.standard_monomials[: D + 1]]

    def total_dimension(self) -> int:
        return sum(self.hilbert_function())

    def coordinates(self, f: Gf2Poly, k: int) -> np.ndarray:
        """Coordinate vector of a reduced degree-k polynomial over the degree-k standard monomials."""
        index = self._index[k]
        v = np.zeros(len(index), dtype=np.uint8)
        for m in f.terms:
            if m not in index:
                raise PreconditionError(f"monomial {m} is not a degree-{k} standard monomial")
            v[index[m]] = 1
        return v

    def from_coordinates(self, v: Sequence[int], k: int) -> Gf2Poly:
        layer = self.standard_monomials[k]
        return Gf2Poly(frozenset(m for m, bit in zip(layer, v) if bit), self.ring.nvars)

    def variable_table(self, var: int, k: int) -> Gf2Matrix:
        """Matrix of multiplication by one variable from degree k to degree k+1."""
        key = (var, k)
        with self._lock:
            cached = self._tables.get(key)
        if cached is not None:
            return cached
        source = self.standard_monomials[k]
        target_index = self._index[k + 1]
        bits = np.zeros((len(target_index), len(source)), dtype=np.uint8)
        unit = self.ring.unit_monomial(var)
        for j, m in enumerate(source):
            image = self.normal_form(Gf2Poly(frozenset([monomial_mul(m, unit)]), self.ring.nvars))
            for t in image.terms:
                bits[target_index[t], j] = 1
        table = Gf2Matrix(bits)
        with self._lock:
            self._tables.setdefault(key, table)
        return table

    def multiplication_matrix(self, ell: Gf2Poly, k: int) -> Gf2Matrix:
        """
        Matrix of m -> normal_form(ell * m) from degree-k to degree-(k+1) standard monomials.

        Raises:
            PreconditionError: if ell is not a nonzero linear form, the ideal is
                not homogeneous, or k+1 exceeds the degree bound
        """
        if ell.is_zero() or ell.degree() != 1 or not ell.is_homogeneous():
            raise PreconditionError("multiplication is only defined here for nonzero linear forms")
        if not self.is_homogeneous:
            raise PreconditionError("graded multiplication needs a homogeneous ideal")
        if k < 0 or k + 1 > self.degree_bound:
            raise PreconditionError(f"degree {k}+1 exceeds the quotient's degree bound {self.degree_bound}")
        rows = len(self.standard_monomials[k + 1])
        cols = len(self.standard_monomials[k])
        bits = np.zeros((rows, cols), dtype=np.uint8)
        for m in ell.terms:
            var = m.index(1)
            bits ^= self.variable_table(var, k).bits
        return Gf2Matrix(bits)

    def reduced_generators(self) -> List[Gf2Poly]:
        return list(self.groebner)
