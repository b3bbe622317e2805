"""
Strict-inequality feasibility by Fourier-Motzkin elimination.

A system is a set of equalities c.p + k = 0 and strict inequalities
c.p + k > 0 over the rationals. Equalities are eliminated first by exact
substitution; the strict rows are then projected one variable at a time.
Every derived row remembers the combination of input rows it came from, so
the solver can hand back a certificate in both outcomes:

- feasible: a rational witness point, recovered by back substitution
- infeasible: multipliers (any sign on equalities, nonnegative on strict rows)
  whose combination has zero coefficients and an impossible constant

`verify_certificate` checks either kind without trusting the solver.
The number of intermediate rows grows exponentially in the worst case, so
elimination stops with FourierMotzkinLimitError beyond a configurable cap.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..infra.config import load_settings
from ..infra.errors import FourierMotzkinLimitError

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class LinearConstraint:
    """The affine function coeffs.p + constant, used as `= 0` or `> 0`."""
    coeffs: Vector
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "constant", Fraction(self.constant))

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * p for c, p in zip(self.coeffs, point)), Fraction(0)) + self.constant


@dataclass(frozen=True)
class LinSystem:
    num_vars: int
    equalities: Tuple[LinearConstraint, ...] = ()
    strict_inequalities: Tuple[LinearConstraint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "equalities", tuple(self.equalities))
        object.__setattr__(self, "strict_inequalities", tuple(self.strict_inequalities))
        for row in self.equalities + self.strict_inequalities:
            if len(row.coeffs) != self.num_vars:
                raise ValueError(
                    f"constraint has {len(row.coeffs)} coefficients, system has {self.num_vars} variables"
                )


@dataclass(frozen=True)
class FeasibilityCertificate:
    feasible: bool
    witness: Optional[Vector] = None
    eq_multipliers: Vector = field(default_factory=tuple)
    strict_multipliers: Vector = field(default_factory=tuple)


@dataclass
class _Row:
    coeffs: List[Fraction]
    constant: Fraction
    lam: List[Fraction]   # multipliers on input equalities
    mu: List[Fraction]    # multipliers on input strict rows (kept >= 0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def key(self) -> Tuple:
        return tuple(self.coeffs) + (self.constant,)


def _combine(a: _Row, fa: Fraction, b: _Row, fb: Fraction) -> _Row:
    return _Row(
        coeffs=[fa * x + fb * y for x, y in zip(a.coeffs, b.coeffs)],
        constant=fa * a.constant + fb * b.constant,
        lam=[fa * x + fb * y for x, y in zip(a.lam, b.lam)],
        mu=[fa * x + fb * y for x, y in zip(a.mu, b.mu)],
    )


def _normalize(row: _Row) -> _Row:
    """Scale by a positive factor so the first nonzero coefficient is +-1."""
    lead = next((c for c in row.coeffs if c != 0), None)
    if lead is None or abs(lead) == 1:
        return row
    scale = 1 / abs(lead)
    return _Row(
        coeffs=[c * scale for c in row.coeffs],
        constant=row.constant * scale,
        lam=[v * scale for v in row.lam],
        mu=[v * scale for v in row.mu],
    )


def _infeasible(row: _Row) -> FeasibilityCertificate:
    return FeasibilityCertificate(
        feasible=False,
        eq_multipliers=tuple(row.lam),
        strict_multipliers=tuple(row.mu),
    )


def _initial_rows(system: LinSystem) -> Tuple[List[_Row], List[_Row]]:
    m_eq = len(system.equalities)
    m_strict = len(system.strict_inequalities)
    zero_eq = [Fraction(0)] * m_eq
    zero_strict = [Fraction(0)] * m_strict
    equalities = []
    for i, row in enumerate(system.equalities):
        lam = list(zero_eq)
        lam[i] = Fraction(1)
        equalities.append(_Row(list(row.coeffs), row.constant, lam, list(zero_strict)))
    stricts = []
    for j, row in enumerate(system.strict_inequalities):
        mu = list(zero_strict)
        mu[j] = Fraction(1)
        stricts.append(_Row(list(row.coeffs), row.constant, list(zero_eq), mu))
    return equalities, stricts


def _pick_variable(rows: List[_Row], num_vars: int) -> Optional[int]:
    best = None
    best_cost = None
    for v in range(num_vars):
        pos = sum(1 for r in rows if r.coeffs[v] > 0)
        neg = sum(1 for r in rows if r.coeffs[v] < 0)
        if pos + neg == 0:
            continue
        cost = pos * neg
        if best_cost is None or cost < best_cost:
            best, best_cost = v, cost
    return best


def _choose_value(lower: Optional[Fraction], upper: Optional[Fraction]) -> Fraction:
    if lower is not None and upper is not None:
        return (lower + upper) / 2
    if lower is not None:
        return lower + 1
    if upper is not None:
        return upper - 1
    return Fraction(0)


def fm_solve(system: LinSystem, max_rows: Optional[int] = None) -> FeasibilityCertificate:
    """
    Decide feasibility of a mixed equality / strict-inequality system.

    Args:
        system: The system to decide
        max_rows: Intermediate row cap; defaults to the `max_fm_rows` setting

    Returns:
        FeasibilityCertificate: witness point or infeasibility multipliers

    Raises:
        FourierMotzkinLimitError: if an elimination stage exceeds the cap
    """
    cap = max_rows if max_rows is not None else load_settings().max_fm_rows
    n = system.num_vars
    equalities, rows = _initial_rows(system)

    # Equalities: pivot on the leftmost nonzero coefficient and substitute.
    pivots: List[Tuple[int, _Row]] = []
    pending = equalities
    while pending:
        eq = pending.pop(0)
        v = next((i for i, c in enumerate(eq.coeffs) if c != 0), None)
        if v is None:
            if eq.constant != 0:
                logger.debug("Equality block is inconsistent")
                return _infeasible(eq)
            continue
        pivot = eq.coeffs[v]
        pending = [
            _combine(r, Fraction(1), eq, -r.coeffs[v] / pivot) if r.coeffs[v] != 0 else r
            for r in pending
        ]
        rows = [
            _combine(r, Fraction(1), eq, -r.coeffs[v] / pivot) if r.coeffs[v] != 0 else r
            for r in rows
        ]
        pivots.append((v, eq))

    # Strict rows: project out variables until only constants remain.
    stages: List[Tuple[int, List[_Row], List[_Row]]] = []
    while True:
        survivors: Dict[Tuple, _Row] = {}
        for r in rows:
            if r.is_zero():
                if r.constant <= 0:
                    logger.debug(f"Derived contradiction 0 > {-r.constant}")
                    return _infeasible(r)
                continue
            r = _normalize(r)
            survivors.setdefault(r.key(), r)
        rows = list(survivors.values())
        if len(rows) > cap:
            raise FourierMotzkinLimitError(len(rows), cap)

        v = _pick_variable(rows, n)
        if v is None:
            break
        pos = [r for r in rows if r.coeffs[v] > 0]
        neg = [r for r in rows if r.coeffs[v] < 0]
        rest = [r for r in rows if r.coeffs[v] == 0]
        logger.debug(f"Eliminating p{v}: zero={len(rest)}, pos={len(pos)}, neg={len(neg)}")
        if len(rest) + len(pos) * len(neg) > cap:
            raise FourierMotzkinLimitError(len(rest) + len(pos) * len(neg), cap)
        combined = [_combine(p, -q.coeffs[v], q, p.coeffs[v]) for p in pos for q in neg]
        stages.append((v, pos, neg))
        rows = rest + combined

    witness = [Fraction(0)] * n
    for v, pos, neg in reversed(stages):
        lower = None
        upper = None
        for r in pos:
            bound = -(_partial(r, witness, v)) / r.coeffs[v]
            lower = bound if lower is None or bound > lower else lower
        for r in neg:
            bound = -(_partial(r, witness, v)) / r.coeffs[v]
            upper = bound if upper is None or bound < upper else upper
        witness[v] = _choose_value(lower, upper)
    for v, eq in reversed(pivots):
        witness[v] = -_partial(eq, witness, v) / eq.coeffs[v]

    return FeasibilityCertificate(feasible=True, witness=tuple(witness))


def _partial(row: _Row, point: List[Fraction], skip: int) -> Fraction:
    total = row.constant
    for i, c in enumerate(row.coeffs):
        if i != skip and c != 0:
            total += c * point[i]
    return total


def fm_feasible(system: LinSystem, max_rows: Optional[int] = None) -> bool:
    return fm_solve(system, max_rows=max_rows).feasible


def verify_certificate(system: LinSystem, cert: FeasibilityCertificate) -> bool:
    """
    Check a certificate against the system using only exact evaluation.

    A witness must satisfy every equality and strict inequality. Multipliers
    must be nonnegative on strict rows and cancel every variable; the leftover
    constant K then has to be impossible: K <= 0 while some strict multiplier
    is positive, or K != 0 when only equalities take part.
    """
    if cert.feasible:
        if cert.witness is None or len(cert.witness) != system.num_vars:
            return False
        return all(row.evaluate(cert.witness) == 0 for row in system.equalities) and all(
            row.evaluate(cert.witness) > 0 for row in system.strict_inequalities
        )

    lam = cert.eq_multipliers
    mu = cert.strict_multipliers
    if len(lam) != len(system.equalities) or len(mu) != len(system.strict_inequalities):
        return False
    if any(m < 0 for m in mu):
        return False
    coeffs = [Fraction(0)] * system.num_vars
    constant = Fraction(0)
    for weight, row in list(zip(lam, system.equalities)) + list(zip(mu, system.strict_inequalities)):
        if weight == 0:
            continue
        for i, c in enumerate(row.coeffs):
            coeffs[i] += weight * c
        constant += weight * row.constant
    if any(coeffs):
        return False
    if any(m > 0 for m in mu):
        return constant <= 0
    return constant != 0
