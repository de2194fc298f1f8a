# -*- coding: utf-8 -*-
"""
pseudowronskian.py — Hermite pseudo-Wronskians H_M
--------------------------------------------------
For a Maya diagram with Frobenius symbol (s_1, …, s_r | t_q, …, t_1) the
determinant has r rows θ_{s_i}, θ_{s_i+1}, … (a Casoratian block) followed
by q rows H_t, D_z H_t, … (a Wronskian block), t ascending.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from sympy import Poly

from mayachains.mc.core.services.exactalg import (
    conjugate_hermite,
    determinant,
    hermite,
    hermite_wronskian,
    z,
)
from mayachains.mc.core.services.maya import MayaDiagram, frobenius, standard_form


@dataclass(frozen=True)
class PseudoWronskian:
    maya: MayaDiagram
    poly: Poly
    r: int
    q: int


def pseudo_wronskian(M: MayaDiagram) -> PseudoWronskian:
    """Exact (r+q)×(r+q) mixed determinant attached to M."""
    symbol = frobenius(M)
    size = symbol.r + symbol.q
    rows: list[list[Poly]] = []
    for s in symbol.s_list:
        rows.append([conjugate_hermite(s + j) for j in range(size)])
    for t in reversed(symbol.t_list):
        row = [hermite(t)]
        for _ in range(1, size):
            row.append(row[-1].diff(z))
        rows.append(row)
    return PseudoWronskian(M, determinant(rows), symbol.r, symbol.q)


def _normalizer(s_list: tuple[int, ...], t_list: tuple[int, ...]) -> int:
    r, q = len(s_list), len(t_list)
    s_part = prod(2 * s_list[j] - 2 * s_list[i] for i in range(r) for j in range(i + 1, r))
    t_part = prod(2 * t_list[i] - 2 * t_list[j] for i in range(q) for j in range(i + 1, q))
    return (-1) ** (r * q) * s_part * t_part


def normalized_pseudo_wronskian(M: MayaDiagram) -> Poly:
    """Ĥ_M; equal for every shift M + k."""
    pw = pseudo_wronskian(M)
    symbol = frobenius(M)
    return pw.poly.quo_ground(_normalizer(symbol.s_list, symbol.t_list))


@lru_cache(maxsize=4096)
def hermite_polynomial(M: MayaDiagram) -> Poly:
    """
    Ĥ_M computed on the standard-form representative.

    In standard form r = 0, so this is a plain Hermite Wronskian over M_+
    in ascending order.
    """
    std, _ = standard_form(M)
    indices = std.filled_nonneg
    wr = hermite_wronskian(indices)
    return wr.quo_ground(_normalizer((), tuple(reversed(indices))))


def wronskian_label(M: MayaDiagram) -> str:
    """``Wr(H_2,H_3,H_4,H_6)`` in standard form, ``pWr(θ_s…|H_t…)`` otherwise."""
    symbol = frobenius(M)
    hs = ",".join(f"H_{t}" for t in reversed(symbol.t_list))
    if symbol.r == 0:
        return f"Wr({hs})" if hs else "1"
    thetas = ",".join(f"θ_{s}" for s in symbol.s_list)
    return f"pWr({thetas}|{hs})"

