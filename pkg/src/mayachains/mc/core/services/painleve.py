# -*- coding: utf-8 -*-
"""
painleve.py — A_{2n}-Painlevé (Noumi–Yamada) solutions
------------------------------------------------------
An odd chain (w | a) with shift Δ ≠ 0 maps to

    f_i(z) = c·(w_i + w_{i+1})(cz),  α_i = c²·a_i,  c² = −1/Δ

which solves  f_i′ + f_i(Σ_j f_{i+2j−1} − Σ_j f_{i+2j}) = α_i  (j = 1..n)
with Σf_i = z and Σα_i = 1. Everything stays exact in Q(c).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, TypeVar, Union

from mayachains.mc.core.models import Check, VerificationReport
from mayachains.mc.core.services.chain import ChainSolution, chain_solution
from mayachains.mc.core.services.cyclic import Signature, a4_blocks, build_cycle
from mayachains.mc.core.services.exactalg import RationalFunction
from mayachains.mc.core.services.quadext import (
    QuadExt,
    QuadRationalFunction,
    quad_sum,
    scale_argument,
)

log = logging.getLogger("mayachains")

F = TypeVar("F", RationalFunction, QuadRationalFunction)


@dataclass(frozen=True)
class PainleveSolution:
    n: int
    f: tuple[QuadRationalFunction, ...]
    alpha: tuple[Fraction, ...]
    c_squared: Fraction
    chain: Optional[ChainSolution] = field(default=None, compare=False, repr=False)


def _residual_check(name: str, residual: QuadRationalFunction, index: Optional[int] = None) -> Check:
    if residual.is_zero:
        return Check(name=name, index=index, passed=True)
    num, _ = residual.as_fraction()
    return Check(name=name, index=index, passed=False, residual=[list(pair) for pair in num.pairs()])


def to_painleve(sol: ChainSolution) -> PainleveSolution:
    """Scale an odd cyclic chain solution into an A_{2n} tuple."""
    p = sol.p
    if p % 2 == 0:
        raise ValueError(f"only odd chains map linearly to A_2n systems, got p={p}")
    if sol.delta == 0:
        raise ValueError("shift Δ must be non-zero")
    d = Fraction(-1) / sol.delta
    c = QuadExt.generator(d)
    f = tuple(
        scale_argument(sol.w[i] + sol.w[(i + 1) % p], c) * c for i in range(p)
    )
    alpha = tuple(d * a for a in sol.a)
    return PainleveSolution(n=(p - 1) // 2, f=f, alpha=alpha, c_squared=d, chain=sol)


def verify_painleve(ps: PainleveSolution) -> VerificationReport:
    """Check the A_{2n} equations and both normalizations exactly over Q(c)."""
    size = 2 * ps.n + 1
    if len(ps.f) != size or len(ps.alpha) != size:
        raise ValueError(f"A_{2 * ps.n} needs {size} functions and parameters")
    d = ps.c_squared
    f = ps.f
    checks: list[Check] = []
    for i in range(size):
        odd = quad_sum((f[(i + 2 * j - 1) % size] for j in range(1, ps.n + 1)), d)
        even = quad_sum((f[(i + 2 * j) % size] for j in range(1, ps.n + 1)), d)
        residual = f[i].derivative() + f[i] * (odd - even) - ps.alpha[i]
        checks.append(_residual_check("equation", residual, i))

    z = QuadRationalFunction.from_rational(RationalFunction.identity(), d)
    checks.append(_residual_check("sum_f", quad_sum(f, d) - z))
    alpha_gap = sum(ps.alpha) - 1
    checks.append(
        Check(name="sum_alpha", passed=alpha_gap == 0, residual=[] if alpha_gap == 0 else [str(alpha_gap)])
    )
    report = VerificationReport(subject="painleve", checks=checks)
    log.debug(f"A_{2 * ps.n} verification: passed={report.passed}")
    return report


def inverse_map(f: Sequence[F]) -> list[F]:
    """w_i = ½ Σ_j (−1)^j f_{i+j}; inverse of f_i = w_i + w_{i+1} for odd length."""
    size = len(f)
    if size % 2 == 0:
        raise ValueError(f"the linear map is only invertible for odd length, got {size}")
    out = []
    for i in range(size):
        total = f[i]
        for j in range(1, size):
            term = f[(i + j) % size]
            total = total - term if j % 2 else total + term
        out.append(total * Fraction(1, 2))
    return out


def rescale_to_chain(f: Sequence[QuadRationalFunction], d: Fraction) -> list[RationalFunction]:
    """
    Undo the Painlevé scaling: w_i(z) = W_i(z/c)/c where W = inverse_map(f).

    Raises:
        ValueError: if a recovered w_i is not rational over Q.
    """
    d = Fraction(d)
    inv_c = QuadExt(0, 1 / d, d)
    return [(W.compose_scaled(inv_c) * inv_c).to_rational() for W in inverse_map(f)]


def seed_solutions(n: int) -> list[PainleveSolution]:
    """
    Seed tuples of A_{2n}: for each odd m ≤ 2n + 1, the first m entries are
    f = z/m, α = 1/m and the rest vanish.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    size = 2 * n + 1
    d = Fraction(-1)
    z = QuadRationalFunction.from_rational(RationalFunction.identity(), d)
    zero = QuadRationalFunction.constant(0, d)
    seeds = []
    for m in range(1, size + 1, 2):
        f = tuple(z * Fraction(1, m) if i < m else zero for i in range(size))
        alpha = tuple(Fraction(1, m) if i < m else Fraction(0) for i in range(size))
        seeds.append(PainleveSolution(n=n, f=f, alpha=alpha, c_squared=d))
    return seeds


def a4_solution(
    signature: Union[Signature, str, Sequence[int]],
    n: Sequence[int],
    perm: Sequence[int],
) -> PainleveSolution:
    """A_4 rational solution labelled by a signature, 4 integers and a normalized permutation."""
    if isinstance(signature, str):
        signature = Signature.parse(signature)
    elif not isinstance(signature, Signature):
        signature = Signature(tuple(signature))
    cycle = build_cycle(a4_blocks(signature, n), perm, require_normalized=True)
    return to_painleve(chain_solution(cycle))
