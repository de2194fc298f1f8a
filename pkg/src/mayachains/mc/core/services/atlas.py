# -*- coding: utf-8 -*-
"""
atlas.py — zeros of the special polynomials of the A_4 families
---------------------------------------------------------------
- WronskianFamilySpec: (signature, n) → Hermite index list → exact Wronskian.
- find_roots: exact origin deflation and square-free splitting, then
  Aberth–Ehrlich iteration in mpmath at a chosen precision, doubling the
  precision until every normalized residual is below 2^(−bits/2).
- emit: CSV (``re,im``), JSON (``[["re", "im"], ...]`` as decimal strings) or an
  SVG scatter.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from math import isqrt, log10
from pathlib import Path
from typing import Optional, Sequence

import mpmath as mp
from sympy import Poly

from mayachains.mc.core.config import Settings, get_settings
from mayachains.mc.core.services.cache import cached_hermite_wronskian
from mayachains.mc.core.services.cyclic import Signature, normalized_blocks
from mayachains.mc.core.services.exactalg import poly
from mayachains.ui.components.svg_scatter import svg_scatter

log = logging.getLogger("mayachains")

FORMATS = ("csv", "json", "svg")


# -----------------------------------------------------------------------------
# Families
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class WronskianFamilySpec:
    signature: Signature
    n: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))

    def indices(self) -> tuple[int, ...]:
        """
        Ascending M_+ of Ξ_k over the normalized block data.

        Every negative box is filled, so this is the Hermite index list
        itself. Zero entries of n collapse a range instead of repeating an
        index; n₁ = 0 keeps H_0 in the list.
        """
        M = normalized_blocks(self.signature, self.n).diagram()
        if M.empty_neg:
            raise ValueError(f"{self.signature} with n={self.n} leaves empty negative boxes")
        return M.filled_nonneg

    def label(self) -> str:
        sig = "".join(map(str, self.signature.parts))
        return f"H{sig}_" + "-".join(map(str, self.n))


def family_polynomial(spec: WronskianFamilySpec, use_cache: bool = True) -> Poly:
    """Exact Hermite Wronskian of the family; degree Σt − m(m−1)/2."""
    return cached_hermite_wronskian(spec.indices(), use_cache=use_cache)


def is_triangular(m: int) -> bool:
    return m >= 0 and isqrt(8 * m + 1) ** 2 == 8 * m + 1


def origin_multiplicity(p: Poly) -> int:
    """Number of vanishing low-order coefficients, read off the exact polynomial."""
    coeffs = p.all_coeffs()[::-1]
    count = 0
    for c in coeffs:
        if c != 0:
            break
        count += 1
    return count


# -----------------------------------------------------------------------------
# Root finding
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class RootSet:
    """
    Zeros with multiplicity of an exact polynomial.

    ``residual_bound`` is 2^(−precision_bits/2); ``max_residual`` is the
    largest normalized residual |p(r)| / (‖p‖∞ · max(1, |r|)^deg) observed.
    ``unconverged`` lists positions of roots above the bound.
    """

    roots: tuple
    precision_bits: int
    residual_bound: object
    max_residual: object
    origin_multiplicity: int = 0
    unconverged: tuple[int, ...] = ()

    @property
    def converged(self) -> bool:
        return not self.unconverged

    @property
    def degree(self) -> int:
        return len(self.roots)


def _aberth(coeffs: Sequence, seeds: Optional[list], max_iterations: int) -> list:
    """Jacobi-style Aberth–Ehrlich sweeps at the current working precision."""
    n = len(coeffs) - 1
    if seeds is None:
        radius = mp.root(abs(coeffs[-1] / coeffs[0]), n)
        seeds = [radius * mp.expj(2 * mp.pi * j / n + mp.mpf("0.4")) for j in range(n)]
    roots = [mp.mpc(r) for r in seeds]
    tol = mp.ldexp(1, -(3 * mp.mp.prec) // 4)

    for _ in range(max_iterations):
        moved = False
        updated = []
        for i, zi in enumerate(roots):
            val, der = mp.polyval(coeffs, zi, derivative=True)
            if val == 0:
                updated.append(zi)
                continue
            if der == 0:
                updated.append(zi * (1 + tol) + tol)
                moved = True
                continue
            ratio = val / der
            repulsion = mp.fsum(1 / (zi - zj) for j, zj in enumerate(roots) if j != i)
            step = ratio / (1 - ratio * repulsion)
            updated.append(zi - step)
            if abs(step) > tol * max(1, abs(zi)):
                moved = True
        roots = updated
        if not moved:
            break
    return roots


def _normalized_residuals(coeffs: Sequence, roots: Sequence) -> list:
    norm = max(abs(c) for c in coeffs)
    deg = len(coeffs) - 1
    return [abs(mp.polyval(coeffs, r)) / (norm * max(1, abs(r)) ** deg) for r in roots]


def find_roots(
    p: Poly,
    precision_bits: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> RootSet:
    """
    All complex zeros of p with multiplicity.

    The origin is split off exactly; the remaining part is split into
    square-free factors (exact) and each factor is iterated on its own,
    so clustered repeated roots never reach the iteration.

    Args:
        p: Non-constant polynomial over Q.
        precision_bits: Starting precision; defaults to MAYACHAINS_PRECISION.
        settings: Overrides for the iteration cap and the precision ceiling.

    Returns:
        RootSet: deterministic for a given polynomial and precision.
    """
    settings = settings or get_settings()
    if p.is_zero or p.degree() < 1:
        raise ValueError("root finding needs a polynomial of degree at least 1")
    prec = precision_bits or settings.precision
    ceiling = max(settings.max_precision, prec)

    m0 = origin_multiplicity(p)
    deflated = p.exquo(poly([0, 1]) ** m0) if m0 else p
    factors = []
    if deflated.degree() > 0:
        _, parts = deflated.sqf_list()
        for factor, mult in parts:
            _, integral = factor.clear_denoms(convert=True)
            factors.append(([int(c) for c in integral.all_coeffs()], mult))
    _, full = p.clear_denoms(convert=True)
    full_coeffs = [int(c) for c in full.all_coeffs()]

    estimates: list[Optional[list]] = [None] * len(factors)
    while True:
        with mp.workprec(prec):
            roots = [mp.mpc(0)] * m0
            for idx, (coeffs, mult) in enumerate(factors):
                mp_coeffs = [mp.mpf(c) for c in coeffs]
                estimates[idx] = _aberth(mp_coeffs, estimates[idx], settings.max_iterations)
                for r in estimates[idx]:
                    roots.extend([r] * mult)
            roots.sort(key=lambda r: (r.real, r.imag))
            residuals = _normalized_residuals([mp.mpf(c) for c in full_coeffs], roots)
            bound = mp.ldexp(1, -prec // 2)
            bad = tuple(i for i, res in enumerate(residuals) if res >= bound)
            worst = max(residuals) if residuals else mp.mpf(0)

        if not bad or prec >= ceiling:
            break
        log.info(f"{len(bad)} roots above 2^-{prec // 2}; raising precision to {min(2 * prec, ceiling)} bits")
        prec = min(2 * prec, ceiling)

    if bad:
        log.warning(f"{len(bad)} of {len(roots)} roots did not converge at {prec} bits")
    return RootSet(
        roots=tuple(roots),
        precision_bits=prec,
        residual_bound=bound,
        max_residual=worst,
        origin_multiplicity=m0,
        unconverged=bad,
    )


def conjugate_pairing(rs: RootSet, tol=None) -> bool:
    """
    True when the roots can be matched to their conjugates within tol·max(1, |r|).

    Compared at the root set's own precision; tol defaults to 10·residual_bound.
    """
    with mp.workprec(rs.precision_bits):
        tol = 10 * rs.residual_bound if tol is None else mp.mpf(tol)
        remaining = list(rs.roots)
        while remaining:
            r = remaining.pop()
            scale = max(1, abs(r))
            if abs(r.imag) <= tol * scale:
                continue
            target = mp.conj(r)
            for j, other in enumerate(remaining):
                if abs(other - target) <= tol * scale:
                    del remaining[j]
                    break
            else:
                return False
    return True


# -----------------------------------------------------------------------------
# Output
# -----------------------------------------------------------------------------
def _digits(precision_bits: int) -> int:
    return max(1, int(precision_bits * log10(2)))


def _fmt(x, rs: RootSet, scale) -> str:
    if abs(x) <= rs.residual_bound * scale:
        return "0"
    return mp.nstr(x, _digits(rs.precision_bits))


def root_rows(rs: RootSet) -> list[tuple[str, str]]:
    with mp.workprec(rs.precision_bits):
        return [
            (_fmt(r.real, rs, max(1, abs(r))), _fmt(r.imag, rs, max(1, abs(r))))
            for r in rs.roots
        ]


def emit(rs: RootSet, fmt: str, path: Path, title: str = "") -> Path:
    """
    Write the roots to ``path`` as csv, json or svg.

    Raises:
        ValueError: unknown format.
        OSError: the file cannot be written.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = root_rows(rs)

    if fmt == "csv":
        body = "re,im\n" + "".join(f"{re},{im}\n" for re, im in rows)
    elif fmt == "json":
        body = json.dumps([list(row) for row in rows]) + "\n"
    else:
        body = svg_scatter([(float(re), float(im)) for re, im in rows], title=title)

    path.write_text(body, encoding="utf-8")
    log.info(f"Wrote {len(rows)} roots → {path}")
    return path
