"""
Orlik-Solomon and equivariant Orlik-Solomon ideals over GF(2).

Generators come in three families:

1. e_i^2 (OS) or e_i(x - e_i) (equivariant), one per hyperplane
2. products over empty intersections (OS) or empty sign regions (equivariant)
3. the boundary of e_S for dependent S (OS), or x^-1 times the sum of a sign
   region product and its reflected product when S meets (equivariant)

Subsets and sign pairs are enumerated exhaustively up to support size
rank + 1. The raw list is then pruned of generators that are monomial
multiples of smaller retained ones; the pruned and raw lists generate the
same ideal.
"""

import itertools
import logging
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..algebra.polynomial import Gf2Poly, PolyRing, monomial_div, monomial_divides, set_variable, substitute
from ..geometry.arrangement import SignPair
from ..infra.errors import ConstructionError, PreconditionError
from ..infra.execution_logs import track_execution
from .oracles import SignOracle, as_oracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Provenance:
    """Where a generator came from: family 1-3 and the index data, or an input file."""
    family: int
    subset: Tuple[int, ...] = ()
    sign_pair: Optional[SignPair] = None
    note: str = ""

    def describe(self) -> str:
        if self.family == 0:
            return self.note or "input"
        if self.sign_pair is not None:
            return f"family {self.family} S+={sorted(self.sign_pair.plus)} S-={sorted(self.sign_pair.minus)}"
        return f"family {self.family} S={list(self.subset)}"


@dataclass(frozen=True)
class IdealPresentation:
    ring: PolyRing
    generators: Tuple[Gf2Poly, ...]
    provenance: Tuple[Provenance, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if len(self.generators) != len(self.provenance):
            raise ValueError("every generator needs a provenance entry")

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def has_x(self) -> bool:
        return self.ring.has_x

    def family(self, k: int) -> List[Gf2Poly]:
        return [g for g, p in zip(self.generators, self.provenance) if p.family == k]


def _product(ring: PolyRing, factors: Iterable[Gf2Poly]) -> Gf2Poly:
    result = ring.one()
    for f in factors:
        result = result * f
    return result


def os_boundary(s: Iterable[int], ring: PolyRing) -> Gf2Poly:
    """Sum over j in S of the product of e_i for i in S minus {j}."""
    indices = sorted(set(s))
    if not indices:
        raise PreconditionError("the boundary of the empty product is undefined")
    total = ring.zero()
    for j in indices:
        total = total + _product(ring, (ring.e(i) for i in indices if i != j))
    return total


def sign_product(sp: SignPair, ring: PolyRing) -> Gf2Poly:
    """prod_{S+} e_i * prod_{S-} (x - e_j)."""
    x = ring.x()
    return _product(ring, [ring.e(i) for i in sorted(sp.plus)] + [x + ring.e(j) for j in sorted(sp.minus)])


def divide_by_x(poly: Gf2Poly, ring: PolyRing) -> Gf2Poly:
    """
    Exact division by x.

    Raises:
        ConstructionError: if some term does not contain x
    """
    xi = ring.x_index
    unit = ring.unit_monomial(xi)
    if any(m[xi] == 0 for m in poly.terms):
        raise ConstructionError(f"polynomial with {len(poly)} terms is not divisible by x")
    return Gf2Poly(frozenset(monomial_div(m, unit) for m in poly.terms), poly.nvars)


def _subsets(n: int, max_size: int) -> Iterator[Tuple[int, ...]]:
    for size in range(1, min(n, max_size) + 1):
        yield from itertools.combinations(range(1, n + 1), size)


def _sign_pairs(n: int, max_size: int) -> Iterator[SignPair]:
    for subset in _subsets(n, max_size):
        for signs in itertools.product((1, -1), repeat=len(subset)):
            yield SignPair(
                frozenset(i for i, s in zip(subset, signs) if s == 1),
                frozenset(i for i, s in zip(subset, signs) if s == -1),
            )


def _is_monomial_multiple(g: Gf2Poly, h: Gf2Poly) -> bool:
    """True iff g = m * h for a monomial m."""
    if len(g) != len(h) or h.is_zero():
        return False
    lg = g.leading_monomial()
    lh = h.leading_monomial()
    if not monomial_divides(lh, lg):
        return False
    return h.mul_monomial(monomial_div(lg, lh)) == g


def prune_generators(generators: Sequence[Gf2Poly], provenance: Sequence[Provenance]
                     ) -> Tuple[List[Gf2Poly], List[Provenance]]:
    """
    Drop zeros, duplicates, and monomial multiples of retained generators.

    Generators are visited in increasing degree so a generator is only ever
    removed in favour of one that is kept.
    """
    order = sorted(range(len(generators)), key=lambda k: (generators[k].degree(), k))
    kept: List[int] = []
    seen = set()
    for k in order:
        g = generators[k]
        if g.is_zero() or g in seen:
            continue
        if any(_is_monomial_multiple(g, generators[j]) for j in kept if generators[j].degree() < g.degree()):
            continue
        kept.append(k)
        seen.add(g)
    kept.sort()
    return [generators[k] for k in kept], [provenance[k] for k in kept]


def _presentation(ring, generators, provenance, label, prune) -> IdealPresentation:
    raw = len(generators)
    if prune:
        generators, provenance = prune_generators(generators, provenance)
    logger.info(f"Built {label} ideal: {raw} raw generators, {len(generators)} kept")
    return IdealPresentation(ring, tuple(generators), tuple(provenance), label)


@track_execution("os_ideal")
def os_ideal(source, prune: bool = True) -> IdealPresentation:
    """
    Orlik-Solomon ideal of an arrangement (or of any SignOracle).

    Args:
        source: Arrangement or SignOracle
        prune: Remove monomial multiples of smaller generators

    Returns:
        IdealPresentation: generators in GF(2)[e1..en]
    """
    oracle: SignOracle = as_oracle(source)
    ring = PolyRing(oracle.n, has_x=False)
    generators: List[Gf2Poly] = []
    provenance: List[Provenance] = []

    for i in range(1, oracle.n + 1):
        generators.append(ring.e(i) * ring.e(i))
        provenance.append(Provenance(1, (i,)))

    for subset in _subsets(oracle.n, oracle.rank + 1):
        s = frozenset(subset)
        if oracle.intersection_empty(s):
            generators.append(_product(ring, (ring.e(i) for i in subset)))
            provenance.append(Provenance(2, subset))
        elif oracle.excess_codim(s):
            generators.append(os_boundary(subset, ring))
            provenance.append(Provenance(3, subset))

    return _presentation(ring, generators, provenance, "os", prune)


def _minimal_empty_pairs(oracle: SignOracle, max_size: int) -> Iterator[Tuple[SignPair, bool]]:
    """
    Empty sign regions, flagged with whether a strictly smaller empty region
    is contained in the pair (then its family-2 product is a multiple).
    """
    empty: List[SignPair] = []
    for sp in _sign_pairs(oracle.n, max_size):
        if not oracle.sign_region_empty(sp):
            continue
        covered = any(t.plus <= sp.plus and t.minus <= sp.minus for t in empty)
        empty.append(sp)
        yield sp, covered


@track_execution("eq_ideal")
def eq_ideal(source, prune: bool = True) -> IdealPresentation:
    """
    Equivariant Orlik-Solomon ideal of an arrangement (or of any SignOracle).

    Args:
        source: Arrangement or SignOracle
        prune: Remove redundant family-2 products and monomial multiples

    Returns:
        IdealPresentation: generators in GF(2)[e1..en, x]

    Raises:
        ConstructionError: if a family-3 numerator is not divisible by x
    """
    oracle: SignOracle = as_oracle(source)
    ring = PolyRing(oracle.n, has_x=True)
    x = ring.x()
    generators: List[Gf2Poly] = []
    provenance: List[Provenance] = []

    for i in range(1, oracle.n + 1):
        generators.append(ring.e(i) * (x + ring.e(i)))
        provenance.append(Provenance(1, (i,)))

    for sp, covered in _minimal_empty_pairs(oracle, oracle.rank + 1):
        subset = tuple(sorted(sp.support))
        product = sign_product(sp, ring)
        if not (prune and covered):
            generators.append(product)
            provenance.append(Provenance(2, subset, sp))
        if not oracle.intersection_empty(sp.support):
            numerator = product + sign_product(sp.swapped(), ring)
            generators.append(divide_by_x(numerator, ring))
            provenance.append(Provenance(3, subset, sp))

    return _presentation(ring, generators, provenance, "eq", prune)


def specialize(p: IdealPresentation, x_value: int) -> IdealPresentation:
    """
    Set x to 0 (the Orlik-Solomon side) or 1 (the Varchenko-Gel'fand side).

    Raises:
        PreconditionError: if the presentation has no x
    """
    if not p.has_x:
        raise PreconditionError("specialize needs an equivariant presentation with x")
    if x_value not in (0, 1):
        raise PreconditionError(f"x can only be specialized to 0 or 1, got {x_value}")
    ring = p.ring.without_x()
    generators = []
    provenance = []
    for g, prov in zip(p.generators, p.provenance):
        image = set_variable(g, p.ring.x_index, x_value)
        if image.is_zero() or image in generators:
            continue
        generators.append(image)
        provenance.append(prov)
    return IdealPresentation(ring, tuple(generators), tuple(provenance), f"{p.label}|x={x_value}")


def flip_coorientation(p: IdealPresentation, i: int) -> IdealPresentation:
    """
    Substitute e_i -> x - e_i in every generator.

    Raises:
        PreconditionError: if the presentation has no x
    """
    if not p.has_x:
        raise PreconditionError("flip_coorientation needs an equivariant presentation with x")
    if not 1 <= i <= p.n:
        raise PreconditionError(f"hyperplane index {i} out of range 1..{p.n}")
    replacement = p.ring.x() + p.ring.e(i)
    generators = tuple(substitute(g, i - 1, replacement) for g in p.generators)
    return replace(p, generators=generators, label=f"{p.label}~flip{i}")


def presentation_for(source, ring_kind: str, prune: bool = True) -> IdealPresentation:
    """The 'os', 'eq' or 'vg' presentation of an arrangement or oracle."""
    if ring_kind == "os":
        return os_ideal(source, prune=prune)
    if ring_kind == "eq":
        return eq_ideal(source, prune=prune)
    if ring_kind == "vg":
        return specialize(eq_ideal(source, prune=prune), 1)
    raise PreconditionError(f"unknown ring kind {ring_kind!r}; expected os, eq or vg")
