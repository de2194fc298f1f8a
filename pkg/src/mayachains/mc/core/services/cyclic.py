# -*- coding: utf-8 -*-
"""
cyclic.py — cyclic Maya diagrams and their flip chains
------------------------------------------------------
- Interlacing Θ and k-modular decomposition.
- k-block coordinates, signatures, canonical flip sequences.
- MayaCycle: M_0 → M_1 → … → M_p = M_0 + k, one flip per step.
- Normalized block coordinates for any odd signature (A_4 table included).
- Enumeration of admissible shifts and signatures.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence

from mayachains.mc.core.services.maya import (
    BlockCoordinates,
    MayaDiagram,
    block_coordinates,
    flip,
    xi,
)

log = logging.getLogger("mayachains")


class MalformedCycleError(ValueError):
    """Block data or a permutation that does not describe a closed cycle."""


# -----------------------------------------------------------------------------
# Interlacing
# -----------------------------------------------------------------------------
def interlace(diagrams: Sequence[MayaDiagram]) -> MayaDiagram:
    """Θ(M^(0), …, M^(k−1)) = ∪ (k·M^(i) + i)."""
    k = len(diagrams)
    if k < 1:
        raise ValueError("interlacing needs at least one diagram")
    windows = [M.window for M in diagrams]
    lo = k * min(w[0] for w in windows)
    hi = k * max(w[1] for w in windows) + k
    members = (m for m in range(lo, hi) if (m // k) in diagrams[m % k])
    return MayaDiagram.from_members(members, lo, hi)


def interlace_sets(sets: Sequence[Iterable[int]]) -> list[int]:
    """Interlacing of finite sets, in block order: k·m + i for m in sets[i]."""
    k = len(sets)
    return [k * m + i for i, block in enumerate(sets) for m in block]


def modular_decompose(M: MayaDiagram, k: int) -> list[MayaDiagram]:
    """M^(i) = {m : k·m + i ∈ M} for i = 0, …, k−1."""
    if k < 1:
        raise ValueError(f"modulus must be positive, got {k}")
    lo, hi = M.window
    parts = []
    for i in range(k):
        q_lo = (lo - i) // k
        q_hi = -((i - hi) // k)
        members = (q for q in range(q_lo, q_hi) if k * q + i in M)
        parts.append(MayaDiagram.from_members(members, q_lo, q_hi))
    return parts


# -----------------------------------------------------------------------------
# Signatures and k-block coordinates
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Signature:
    """k odd positive parts summing to p."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if not parts:
            raise ValueError("a signature needs at least one part")
        if any(x < 1 or x % 2 == 0 for x in parts):
            raise ValueError(f"signature parts must be odd and positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse ``"1,1,3"`` (brackets and spaces tolerated)."""
        body = text.strip().strip("()[]")
        try:
            return cls(tuple(int(x) for x in body.split(",") if x.strip()))
        except ValueError as e:
            raise ValueError(f"bad signature {text!r}: {e}") from e

    @property
    def p(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class KBlockCoordinates:
    """(β^(0) | … | β^(k−1)); Ξ_k = Θ(Ξ(β^(0)), …, Ξ(β^(k−1)))."""

    blocks: tuple[BlockCoordinates, ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(int(b) for b in block) for block in self.blocks)
        if not blocks:
            raise MalformedCycleError("k-block coordinates need at least one block")
        for block in blocks:
            if len(block) % 2 == 0:
                raise MalformedCycleError(f"block {block} has even length")
            if any(a > b for a, b in zip(block, block[1:])):
                raise MalformedCycleError(f"block {block} is not non-decreasing")
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def signature(self) -> Signature:
        return Signature(tuple(len(b) for b in self.blocks))

    @property
    def degenerate(self) -> bool:
        return any(a == b for block in self.blocks for a, b in zip(block, block[1:]))

    def diagram(self) -> MayaDiagram:
        return interlace([xi(block) for block in self.blocks])

    def __str__(self) -> str:
        return "(" + " | ".join(",".join(map(str, b)) for b in self.blocks) + ")"


def k_block_coordinates(M: MayaDiagram, k: int) -> KBlockCoordinates:
    """k-block coordinates of M: block coordinates of each modular part."""
    return KBlockCoordinates(tuple(block_coordinates(part) for part in modular_decompose(M, k)))


def canonical_flip_sequence(blocks: KBlockCoordinates) -> list[int]:
    """Υ(M, M + k) enumerated residue by residue: k·β^(i)_j + i."""
    return interlace_sets(blocks.blocks)


# -----------------------------------------------------------------------------
# Cycles
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class MayaCycle:
    """
    A (p, k)-cyclic chain of Maya diagrams.

    Attributes:
        diagrams: M_0, …, M_p with M_{i+1} = flip(M_i, flip_sites[i]).
        flip_sites: μ_{π_0}, …, μ_{π_{p−1}}.
        k: Shift with M_p = M_0 + k.
        signs: +1 when the site is in M_i, −1 otherwise.
        lambdas: 2μ + 1 for each site.
        a: 2(μ_i − μ_{i+1}) with μ_p := μ_0 + k.
        blocks, perm: The generating data when built by ``build_cycle``.
    """

    diagrams: tuple[MayaDiagram, ...]
    flip_sites: tuple[int, ...]
    k: int
    signs: tuple[int, ...]
    lambdas: tuple[int, ...]
    a: tuple[int, ...]
    blocks: Optional[KBlockCoordinates] = None
    perm: Optional[tuple[int, ...]] = None

    @classmethod
    def from_flip_sites(
        cls,
        start: MayaDiagram,
        sites: Sequence[int],
        k: int,
        blocks: Optional[KBlockCoordinates] = None,
        perm: Optional[Sequence[int]] = None,
    ) -> "MayaCycle":
        """Flip ``start`` at each site in turn and check that the chain closes on start + k."""
        sites = tuple(int(s) for s in sites)
        if not sites:
            raise MalformedCycleError("a cycle needs at least one flip")
        diagrams = [start]
        signs = []
        for site in sites:
            current = diagrams[-1]
            signs.append(1 if site in current else -1)
            diagrams.append(flip(current, site))
        if diagrams[-1] != start + k:
            raise MalformedCycleError(
                f"flips {sites} carry {start} to {diagrams[-1]}, not to {start + k}"
            )
        ends = sites + (sites[0] + k,)
        a = tuple(2 * (ends[i] - ends[i + 1]) for i in range(len(sites)))
        return cls(
            diagrams=tuple(diagrams),
            flip_sites=sites,
            k=k,
            signs=tuple(signs),
            lambdas=tuple(2 * s + 1 for s in sites),
            a=a,
            blocks=blocks,
            perm=tuple(perm) if perm is not None else None,
        )

    @property
    def p(self) -> int:
        return len(self.flip_sites)

    @property
    def delta(self) -> int:
        return 2 * self.k

    @property
    def degenerate(self) -> bool:
        return len(set(self.flip_sites)) < len(self.flip_sites)

    @property
    def signature(self) -> Optional[Signature]:
        return self.blocks.signature if self.blocks is not None else None

    def reversed(self) -> "MayaCycle":
        """Traverse the chain backwards: M_p, …, M_0 with shift −k."""
        return MayaCycle.from_flip_sites(self.diagrams[-1], tuple(reversed(self.flip_sites)), -self.k)


def _check_perm(perm: Sequence[int], p: int) -> tuple[int, ...]:
    perm = tuple(int(x) for x in perm)
    if sorted(perm) != list(range(p)):
        raise MalformedCycleError(f"{perm} is not a permutation of 0..{p - 1}")
    return perm


def build_cycle(
    blocks: KBlockCoordinates,
    perm: Sequence[int],
    require_normalized: bool = False,
) -> MayaCycle:
    """
    Flip Ξ_k(blocks) through its canonical flip sequence in the order ``perm``.

    Args:
        blocks: k-block coordinates of M_0.
        perm: One-line notation: step i flips the canonical site perm[i].
        require_normalized: Demand perm[-1] == 0, the normalized labelling.

    Raises:
        MalformedCycleError: bad permutation or a chain that does not close.
    """
    mu = canonical_flip_sequence(blocks)
    perm = _check_perm(perm, len(mu))
    if require_normalized and perm[-1] != 0:
        raise MalformedCycleError(f"normalized permutations end with 0, got {perm}")
    sites = [mu[j] for j in perm]
    cycle = MayaCycle.from_flip_sites(blocks.diagram(), sites, blocks.k, blocks=blocks, perm=perm)
    log.debug(f"cycle {blocks} perm={perm}: sites={cycle.flip_sites} a={cycle.a}")
    return cycle


# -----------------------------------------------------------------------------
# Normalized families
# -----------------------------------------------------------------------------
A4_SIGNATURES = ((5,), (3, 1, 1), (1, 3, 1), (1, 1, 3), (1, 1, 1, 1, 1))


def normalized_blocks(signature: Signature, n: Sequence[int]) -> KBlockCoordinates:
    """
    Normalized k-block coordinates from p − 1 non-negative integers.

    Block 0 starts at 0; every other block starts at the next entry of n.
    Inside a block each following coordinate adds the next entry of n.
    """
    n = tuple(int(x) for x in n)
    if len(n) != signature.p - 1:
        raise ValueError(f"signature {signature} needs {signature.p - 1} integers, got {len(n)}")
    if any(x < 0 for x in n):
        raise ValueError(f"entries must be non-negative: {n}")
    values = iter(n)
    blocks = []
    for i, size in enumerate(signature.parts):
        current = 0 if i == 0 else next(values)
        block = [current]
        for _ in range(size - 1):
            current += next(values)
            block.append(current)
        blocks.append(tuple(block))
    return KBlockCoordinates(tuple(blocks))


def a4_blocks(signature: Signature, n: Sequence[int]) -> KBlockCoordinates:
    """k-block coordinates of the A_4 families, one per signature."""
    if signature.parts not in A4_SIGNATURES:
        raise ValueError(f"{signature} is not an A_4 signature")
    if len(n) != 4:
        raise ValueError(f"A_4 families take 4 integers, got {len(n)}")
    return normalized_blocks(signature, n)


def admissible_shifts(p: int) -> list[int]:
    """Shifts k with 1 ≤ k ≤ p and k ≡ p (mod 2)."""
    if p < 1 or p % 2 == 0:
        raise ValueError(f"p must be odd and positive, got {p}")
    return list(range(1, p + 1, 2))


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total - (parts - 1), 0, -2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_signatures(p: int, k: int) -> list[Signature]:
    """All ordered k-tuples of odd positive integers summing to p."""
    if k not in admissible_shifts(p):
        raise ValueError(f"k={k} is not an admissible shift for p={p}")
    return [Signature(c) for c in _compositions(p, k)]


def count_normalized_diagrams(signature: Signature, bound: int) -> int:
    """
    Number of non-degenerate normalized k-block coordinates with entries in
    [0, bound]: block 0 fixes its first entry at 0.
    """
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    first, *rest = signature.parts
    total = comb(bound, first - 1)
    for size in rest:
        total *= comb(bound + 1, size)
    return total
