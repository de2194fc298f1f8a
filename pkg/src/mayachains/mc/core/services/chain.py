# -*- coding: utf-8 -*-
"""
chain.py — rational solutions of cyclic dressing chains
-------------------------------------------------------
A MayaCycle M_0 → … → M_p = M_0 + k gives

    w_i = s_i·z + (log H_{M_{i+1}})′ − (log H_{M_i})′
    U_M = z² − 2(log H_M)″ + 2·s_M

and every identity of the chain is checked by reducing a residual to the
zero rational function.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from mayachains.mc.core.models import Check, VerificationReport
from mayachains.mc.core.services.cyclic import MayaCycle
from mayachains.mc.core.services.exactalg import (
    RationalFunction,
    coefficients,
    log_derivative,
)
from mayachains.mc.core.services.maya import MayaDiagram, flip
from mayachains.mc.core.services.pseudowronskian import hermite_polynomial, wronskian_label

log = logging.getLogger("mayachains")

Z = RationalFunction.identity()


def _check(name: str, residual: RationalFunction, index: Optional[int] = None) -> Check:
    if residual.is_zero:
        return Check(name=name, index=index, passed=True)
    return Check(
        name=name,
        index=index,
        passed=False,
        residual=[str(c) for c in coefficients(residual.num)],
    )


# -----------------------------------------------------------------------------
# Potentials
# -----------------------------------------------------------------------------
def potential(M: MayaDiagram) -> RationalFunction:
    """Rational extension U_M = z² − 2(H_M′/H_M)′ + 2·s_M."""
    ld = log_derivative(hermite_polynomial(M))
    return Z * Z - 2 * ld.derivative() + 2 * M.index


# -----------------------------------------------------------------------------
# Chain solutions
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class ChainSolution:
    cycle: MayaCycle
    w: tuple[RationalFunction, ...]
    a: tuple[Fraction, ...]
    delta: Fraction
    potentials: tuple[RationalFunction, ...] = field(repr=False)

    @property
    def p(self) -> int:
        return len(self.w)

    @property
    def lambdas(self) -> tuple[int, ...]:
        return self.cycle.lambdas

    def hermite_labels(self) -> list[str]:
        """Labels of H_{M_0}, …, H_{M_{p−1}}."""
        return [wronskian_label(M) for M in self.cycle.diagrams[:-1]]


def chain_solution(cycle: MayaCycle) -> ChainSolution:
    """Populate (w_0, …, w_{p−1} | a_0, …, a_{p−1}) and U_{M_0}, …, U_{M_p}."""
    lds = [log_derivative(hermite_polynomial(M)) for M in cycle.diagrams]
    w = tuple(s * Z + lds[i + 1] - lds[i] for i, s in enumerate(cycle.signs))
    potentials = tuple(potential(M) for M in cycle.diagrams)
    log.debug(f"chain p={cycle.p} k={cycle.k}: {len(w)} factorization functions built")
    return ChainSolution(
        cycle=cycle,
        w=w,
        a=tuple(Fraction(x) for x in cycle.a),
        delta=Fraction(cycle.delta),
        potentials=potentials,
    )


def chain_from_stored(
    cycle: MayaCycle,
    w: Sequence[RationalFunction],
    a: Sequence[Fraction],
    delta: Fraction,
) -> ChainSolution:
    """
    Pair stored (w | a, Δ) values with potentials recomputed from the cycle.

    Nothing is re-derived from w, so tampered values fail verification.
    """
    if len(w) != cycle.p or len(a) != cycle.p:
        raise ValueError(f"expected {cycle.p} functions and weights, got {len(w)} and {len(a)}")
    return ChainSolution(
        cycle=cycle,
        w=tuple(w),
        a=tuple(Fraction(x) for x in a),
        delta=Fraction(delta),
        potentials=tuple(potential(M) for M in cycle.diagrams),
    )


def reverse_solution(sol: ChainSolution) -> ChainSolution:
    """Solution of the reversed chain (Δ ↦ −Δ)."""
    return chain_solution(sol.cycle.reversed())


def verify_chain(sol: ChainSolution) -> VerificationReport:
    """
    Check every chain identity exactly.

    Checks:
        chain: (w_i + w_{i+1})′ + w_{i+1}² − w_i² − a_i
        riccati_lower: w_i′ + w_i² − (U_i − λ_i)
        riccati_upper: −w_i′ + w_i² − (U_{i+1} − λ_i)
        potential_step: U_{i+1} − U_i + 2w_i′
        weights_sum: Σa_i + Δ
        first_integral: Σw_i + Δz/2
        potential_shift: U_p − U_0 − Δ
    """
    p = sol.p
    w, a, U = sol.w, sol.a, sol.potentials
    dw = [wi.derivative() for wi in w]
    sq = [wi * wi for wi in w]
    checks: list[Check] = []

    for i in range(p):
        j = (i + 1) % p
        checks.append(_check("chain", dw[i] + dw[j] + sq[j] - sq[i] - a[i], i))
    for i in range(p):
        lam = sol.lambdas[i]
        checks.append(_check("riccati_lower", dw[i] + sq[i] - (U[i] - lam), i))
        checks.append(_check("riccati_upper", -dw[i] + sq[i] - (U[i + 1] - lam), i))
    for i in range(p):
        checks.append(_check("potential_step", U[i + 1] - U[i] + 2 * dw[i], i))

    checks.append(_check("weights_sum", RationalFunction.constant(sum(a) + sol.delta)))
    total = RationalFunction.constant(0)
    for wi in w:
        total = total + wi
    checks.append(_check("first_integral", total + sol.delta / 2 * Z))
    checks.append(_check("potential_shift", U[p] - U[0] - sol.delta))

    report = VerificationReport(subject="chain", checks=checks)
    log.debug(f"chain verification: {len(checks)} checks, passed={report.passed}")
    return report


def verify_eigenfunction(M: MayaDiagram, m: int) -> VerificationReport:
    """
    Check −(u′ + u²) + U_M − (2m + 1) = 0 for the seed function at m.

    u is the log-derivative of ψ_{M,m}: εz + (log H_{M′})′ − (log H_M)′ with
    M′ = flip(M, m) and ε = +1 when m ∈ M, −1 otherwise.
    """
    eps = 1 if m in M else -1
    u = eps * Z + log_derivative(hermite_polynomial(flip(M, m))) - log_derivative(
        hermite_polynomial(M)
    )
    residual = -(u.derivative() + u * u) + potential(M) - (2 * m + 1)
    return VerificationReport(subject="eigenfunction", checks=[_check("eigenvalue", residual, m)])
