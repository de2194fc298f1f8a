# -*- coding: utf-8 -*-
"""
maya.py — Maya diagrams
-----------------------
A Maya diagram is a set of integers containing every sufficiently negative
integer and no sufficiently positive one. Only the finite perturbation is
stored:

    filled_nonneg  M_+ = {m ≥ 0 : m ∈ M}
    empty_neg      M_- = {-m-1 : m < 0, m ∉ M}

Operations that need a window of boxes (scans, rendering) compute it from
this data or take it as an argument.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

BlockCoordinates = tuple[int, ...]


def _strict(values: Sequence[int], name: str) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    if any(v < 0 for v in out):
        raise ValueError(f"{name} must contain non-negative integers: {out}")
    if any(a >= b for a, b in zip(out, out[1:])):
        raise ValueError(f"{name} must be strictly increasing: {out}")
    return out


@dataclass(frozen=True)
class FrobeniusSymbol:
    """(s_1, …, s_r | t_q, …, t_1) with s_1 > … > s_r and t_1 > … > t_q."""

    s_list: tuple[int, ...] = ()
    t_list: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for name, values in (("s_list", self.s_list), ("t_list", self.t_list)):
            vals = tuple(int(v) for v in values)
            if any(v < 0 for v in vals) or any(a <= b for a, b in zip(vals, vals[1:])):
                raise ValueError(f"{name} must be strictly decreasing and non-negative: {vals}")
            object.__setattr__(self, name, vals)

    @property
    def r(self) -> int:
        return len(self.s_list)

    @property
    def q(self) -> int:
        return len(self.t_list)

    @property
    def index(self) -> int:
        return self.q - self.r

    def __str__(self) -> str:
        s = ",".join(map(str, self.s_list))
        t = ",".join(map(str, self.t_list))
        return f"({s} | {t})"


@dataclass(frozen=True)
class MayaDiagram:
    """Labelled Maya diagram; equality is structural on (M_+, M_-)."""

    filled_nonneg: tuple[int, ...] = ()
    empty_neg: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "filled_nonneg", _strict(self.filled_nonneg, "filled_nonneg"))
        object.__setattr__(self, "empty_neg", _strict(self.empty_neg, "empty_neg"))

    # -- construction ---------------------------------------------------------
    @classmethod
    def from_members(cls, members: Iterable[int], lo: int, hi: int) -> "MayaDiagram":
        """
        Diagram that is filled below ``lo``, empty from ``hi`` on, and equal
        to ``members`` inside [lo, hi).
        """
        if lo > hi:
            raise ValueError(f"empty window: lo={lo} > hi={hi}")
        inside = {m for m in members if lo <= m < hi}
        filled = set(range(0, max(lo, 0)))
        filled.update(m for m in inside if m >= 0)
        empty = {-m - 1 for m in range(min(hi, 0), 0)}
        empty.update(-m - 1 for m in range(lo, min(hi, 0)) if m not in inside)
        return cls(tuple(sorted(filled)), tuple(sorted(empty)))

    # -- basic queries --------------------------------------------------------
    def __contains__(self, m: int) -> bool:
        if m >= 0:
            return m in self._filled_set
        return (-m - 1) not in self._empty_set

    @cached_property
    def _filled_set(self) -> frozenset[int]:
        return frozenset(self.filled_nonneg)

    @cached_property
    def _empty_set(self) -> frozenset[int]:
        return frozenset(self.empty_neg)

    @property
    def window(self) -> tuple[int, int]:
        """[lo, hi) outside of which the diagram is trivially filled/empty."""
        lo = -(self.empty_neg[-1] + 1) if self.empty_neg else 0
        hi = self.filled_nonneg[-1] + 1 if self.filled_nonneg else 0
        return lo, hi

    def members(self, lo: int, hi: int) -> list[int]:
        return [m for m in range(lo, hi) if m in self]

    @property
    def index(self) -> int:
        return len(self.filled_nonneg) - len(self.empty_neg)

    # -- shifts ---------------------------------------------------------------
    def __add__(self, k: int) -> "MayaDiagram":
        if not isinstance(k, int):
            return NotImplemented
        lo, hi = self.window
        return MayaDiagram.from_members((m + k for m in self.members(lo, hi)), lo + k, hi + k)

    def __sub__(self, k: int) -> "MayaDiagram":
        if not isinstance(k, int):
            return NotImplemented
        return self + (-k)

    def __str__(self) -> str:
        return f"Ξ{block_coordinates(self)}".replace(",)", ")")


TRIVIAL = MayaDiagram()


# -----------------------------------------------------------------------------
# Elementary operations
# -----------------------------------------------------------------------------
def membership(M: MayaDiagram, m: int) -> bool:
    return m in M


def index(M: MayaDiagram) -> int:
    """Index s_M = |M_+| − |M_-|."""
    return M.index


def frobenius(M: MayaDiagram) -> FrobeniusSymbol:
    return FrobeniusSymbol(tuple(reversed(M.empty_neg)), tuple(reversed(M.filled_nonneg)))


def from_frobenius(symbol: FrobeniusSymbol) -> MayaDiagram:
    return MayaDiagram(tuple(sorted(symbol.t_list)), tuple(sorted(symbol.s_list)))


def shift(M: MayaDiagram, k: int) -> MayaDiagram:
    return M + k


def block_coordinates(M: MayaDiagram) -> BlockCoordinates:
    """
    Strictly increasing β with M = (−∞, β_0) ∪ [β_1, β_2) ∪ … ∪ [β_{2g−1}, β_{2g}).

    The entries are exactly the positions where membership changes.
    """
    lo, hi = M.window
    beta: list[int] = []
    state = True
    for m in range(lo, hi + 1):
        filled = m in M
        if filled != state:
            beta.append(m)
            state = filled
    return tuple(beta)


def xi(beta: Sequence[int]) -> MayaDiagram:
    """
    Diagram with block coordinates β.

    Non-decreasing input is accepted for degenerate chains; zero-length
    blocks simply vanish.
    """
    beta = tuple(int(b) for b in beta)
    if len(beta) % 2 == 0:
        raise ValueError(f"block coordinates need odd length, got {len(beta)}: {beta}")
    if any(a > b for a, b in zip(beta, beta[1:])):
        raise ValueError(f"block coordinates must be non-decreasing: {beta}")
    members: set[int] = set()
    for start, stop in zip(beta[1::2], beta[2::2]):
        members.update(range(start, stop))
    return MayaDiagram.from_members(members, beta[0], beta[-1])


def genus(M: MayaDiagram) -> int:
    return (len(block_coordinates(M)) - 1) // 2


def standard_form(M: MayaDiagram) -> tuple[MayaDiagram, int]:
    """
    Return (M − k, k) where M − k has β_0 = 0.

    The result has no empty negative boxes and an empty box at the origin.
    """
    k = block_coordinates(M)[0]
    return M - k, k


def equivalent(M1: MayaDiagram, M2: MayaDiagram) -> bool:
    """True when M1 and M2 differ by a shift."""
    return standard_form(M1)[0] == standard_form(M2)[0]


def flip(M: MayaDiagram, m: int) -> MayaDiagram:
    """Toggle the membership of m."""
    if m >= 0:
        filled = M._filled_set ^ {m}
        return MayaDiagram(tuple(sorted(filled)), M.empty_neg)
    empty = M._empty_set ^ {-m - 1}
    return MayaDiagram(M.filled_nonneg, tuple(sorted(empty)))


def multi_flip(M: MayaDiagram, mu: Iterable[int]) -> MayaDiagram:
    """Flip at every site of the multiset μ; repeated pairs cancel."""
    for site, count in sorted(Counter(mu).items()):
        if count % 2:
            M = flip(M, site)
    return M


def symmetric_difference(M: MayaDiagram, M2: MayaDiagram) -> frozenset[int]:
    """Υ(M, M2), the minimal flip set carrying M to M2."""
    lo1, hi1 = M.window
    lo2, hi2 = M2.window
    lo, hi = min(lo1, lo2), max(hi1, hi2)
    return frozenset(m for m in range(lo, hi) if (m in M) != (m in M2))


def render(M: MayaDiagram, lo: int, hi: int) -> str:
    """``#``/``.`` boxes over [lo, hi) with ``|`` in front of position 0."""
    out = []
    for m in range(lo, hi):
        if m == 0:
            out.append("|")
        out.append("#" if m in M else ".")
    if hi == 0:
        out.append("|")
    return "".join(out)
