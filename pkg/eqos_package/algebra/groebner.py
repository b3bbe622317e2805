"""Reduced Groebner bases over GF(2) with Buchberger's algorithm."""

import logging
from typing import List, Sequence, Set, Tuple

from ..infra.execution_logs import track_execution
from .polynomial import (
    GREVLEX,
    Gf2Poly,
    Monomial,
    MonomialOrder,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def spoly(f: Gf2Poly, g: Gf2Poly, lmf: Monomial, lmg: Monomial) -> Gf2Poly:
    """Return the s-polynomial of f and g (all coefficients are 1 over GF(2))."""
    lcm = monomial_lcm(lmf, lmg)
    return f.mul_monomial(monomial_div(lcm, lmf)) + g.mul_monomial(monomial_div(lcm, lmg))


def reduce(g: Gf2Poly, F: Sequence[Gf2Poly], lmF: Sequence[Monomial], order: MonomialOrder = GREVLEX) -> Gf2Poly:
    """Return the full remainder of g on division by F."""
    pending = set(g.terms)
    remainder = set()
    while pending:
        m = max(pending, key=order.key)
        for f, lm in zip(F, lmF):
            if monomial_divides(lm, m):
                shift = monomial_div(m, lm)
                pending ^= {monomial_mul(t, shift) for t in f.terms}
                break
        else:
            pending.remove(m)
            remainder.add(m)
    return Gf2Poly(frozenset(remainder), g.nvars)


def update(G: List[Gf2Poly], lmG: List[Monomial], P: Set[Pair], f: Gf2Poly, lmf: Monomial,
           order: MonomialOrder = GREVLEX) -> Set[Pair]:
    """Add f to G and return the pair set after Gebauer-Moeller pruning."""
    lcm = monomial_lcm
    P = {p for p in P if (not monomial_divides(lmf, lcm(lmG[p[0]], lmG[p[1]])) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf))}
    lcm_dict = {}
    for i in range(len(G)):
        lcm_dict.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimalized_lcms = []
    for L in sorted(lcm_dict.keys(), key=order.key):
        if all(not monomial_divides(L_, L) for L_ in minimalized_lcms):
            minimalized_lcms.append(L)
    new_pairs = set()
    for L in minimalized_lcms:
        # Product criterion: coprime leading monomials give a zero s-polynomial.
        if not any(lcm(lmG[i], lmf) == monomial_mul(lmG[i], lmf) for i in lcm_dict[L]):
            new_pairs.add((min(lcm_dict[L]), len(G)))
    G.append(f)
    lmG.append(lmf)
    return P | new_pairs


def minimalize(G: Sequence[Gf2Poly], order: MonomialOrder = GREVLEX) -> List[Gf2Poly]:
    """Return a minimal Groebner basis from arbitrary Groebner basis G."""
    Gmin: List[Gf2Poly] = []
    lms: List[Monomial] = []
    for f in sorted(G, key=lambda h: order.key(h.leading_monomial(order))):
        lm = f.leading_monomial(order)
        if all(not monomial_divides(l, lm) for l in lms):
            Gmin.append(f)
            lms.append(lm)
    return Gmin


def interreduce(G: Sequence[Gf2Poly], order: MonomialOrder = GREVLEX) -> List[Gf2Poly]:
    """Return the reduced Groebner basis from a minimal Groebner basis G."""
    lms = [g.leading_monomial(order) for g in G]
    Gred = []
    for i in range(len(G)):
        others = list(G[:i]) + list(G[i + 1:])
        other_lms = lms[:i] + lms[i + 1:]
        Gred.append(reduce(G[i], others, other_lms, order))
    return Gred


@track_execution("buchberger")
def buchberger(gens: Sequence[Gf2Poly], order: MonomialOrder = GREVLEX) -> List[Gf2Poly]:
    """
    Compute the reduced Groebner basis of the ideal generated by `gens`.

    Pairs are selected with the normal strategy (smallest lcm first). Input
    generators are not all added up front: each waits in a queue ordered by
    its leading monomial and is reduced against the current basis when it is
    smaller than every pending lcm, so redundant generators vanish before
    spawning pairs.

    Args:
        gens: Generators; zeros and duplicates are allowed
        order: Monomial order

    Returns:
        List[Gf2Poly]: the reduced basis, sorted by increasing leading monomial
    """
    inputs = sorted(
        {g for g in gens if not g.is_zero()},
        key=lambda g: (order.key(g.leading_monomial(order)), sorted(map(order.key, g.terms))),
        reverse=True,
    )
    G: List[Gf2Poly] = []
    lmG: List[Monomial] = []
    P: Set[Pair] = set()
    reductions = 0

    while inputs or P:
        pair = min(P, key=lambda p: (order.key(monomial_lcm(lmG[p[0]], lmG[p[1]])), p)) if P else None
        if inputs and (pair is None or order.key(inputs[-1].leading_monomial(order))
                       <= order.key(monomial_lcm(lmG[pair[0]], lmG[pair[1]]))):
            candidate = inputs.pop()
        else:
            P.remove(pair)
            candidate = spoly(G[pair[0]], G[pair[1]], lmG[pair[0]], lmG[pair[1]])
        r = reduce(candidate, G, lmG, order)
        reductions += 1
        if not r.is_zero():
            P = update(G, lmG, P, r, r.leading_monomial(order), order)

    basis = interreduce(minimalize(G, order), order)
    basis.sort(key=lambda g: order.key(g.leading_monomial(order)))
    logger.debug(f"Buchberger: {len(gens)} generators, {reductions} reductions, basis size {len(basis)}")
    return basis


def ideal_equal(g1: Sequence[Gf2Poly], g2: Sequence[Gf2Poly], order: MonomialOrder = GREVLEX) -> bool:
    """True iff both generator lists have the same reduced Groebner basis."""
    return buchberger(g1, order) == buchberger(g2, order)


def ideal_contains(gens: Sequence[Gf2Poly], f: Gf2Poly, order: MonomialOrder = GREVLEX) -> bool:
    basis = buchberger(gens, order)
    return reduce(f, basis, [g.leading_monomial(order) for g in basis], order).is_zero()
