# -*- coding: utf-8 -*-
"""
exactalg.py — exact univariate algebra over Q
---------------------------------------------
- Poly: sympy ``Poly`` in the symbol ``z`` over ``QQ``.
- RationalFunction: reduced num/den pair with a monic denominator.
- Hermite H_n and conjugate Hermite θ_n generators.
- Wronskians by fraction-free elimination or evaluation/interpolation.
- Text form of coefficient lists: ``[12, 0, -48, 0, 16]`` (ascending degree).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from sympy import Poly, QQ, Rational, Symbol, hermite_poly

from mayachains.mc.core.config import get_settings

log = logging.getLogger("mayachains")

z = Symbol("z")

Scalar = Union[int, Fraction]


# -----------------------------------------------------------------------------
# Polynomials
# -----------------------------------------------------------------------------
def poly(coeffs: Iterable[Scalar]) -> Poly:
    """Build a polynomial from ascending coefficients."""
    desc = [Rational(c.numerator, c.denominator) for c in map(Fraction, coeffs)][::-1]
    return Poly.from_list(desc or [0], z, domain=QQ)


def coefficients(p: Poly) -> list[Fraction]:
    """Ascending coefficients as Fractions; the zero polynomial gives []."""
    if p.is_zero:
        return []
    return [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]


ZERO = poly([])
ONE = poly([1])
Z = poly([0, 1])


def poly_text(p: Poly) -> str:
    return "[" + ", ".join(str(c) for c in coefficients(p)) + "]"


def poly_from_text(text: str) -> Poly:
    """Parse the ``[c0, c1, ...]`` text form back into a polynomial."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"not a coefficient list: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return ZERO
    try:
        return poly(Fraction(part.strip()) for part in inner.split(","))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"bad coefficient in {text!r}: {e}") from e


@lru_cache(maxsize=None)
def hermite(n: int) -> Poly:
    """Physicists' Hermite polynomial H_n."""
    if n < 0:
        raise ValueError(f"Hermite degree must be non-negative, got {n}")
    return hermite_poly(n, z, polys=True).set_domain(QQ)


@lru_cache(maxsize=None)
def conjugate_hermite(n: int) -> Poly:
    """
    Conjugate Hermite polynomial θ_n(z) = i^{-n} H_n(iz).

    Generated by θ_{n+1} = 2zθ_n + 2nθ_{n-1}, so every coefficient is a
    non-negative integer.
    """
    if n < 0:
        raise ValueError(f"conjugate Hermite degree must be non-negative, got {n}")
    if n == 0:
        return ONE
    if n == 1:
        return poly([0, 2])
    return Z * conjugate_hermite(n - 1) * 2 + conjugate_hermite(n - 2) * (2 * (n - 1))


# -----------------------------------------------------------------------------
# Determinants
# -----------------------------------------------------------------------------
def determinant(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """
    Fraction-free (Bareiss) determinant of a square matrix over Q[z].

    Every intermediate division is exact, so no rational functions appear.
    A zero pivot is replaced by swapping in a lower row.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return ONE
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")

    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]).exquo(prev)
        prev = pivot
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def _integer_determinant(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _horner(desc: list[int], x: int) -> int:
    acc = 0
    for c in desc:
        acc = acc * x + c
    return acc


def _newton_interpolate(xs: list[int], ys: list[int]) -> list[Fraction]:
    """Ascending coefficients of the interpolating polynomial through (xs, ys)."""
    dd = [Fraction(y) for y in ys]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])

    coeffs = [Fraction(0)] * n
    coeffs[0] = dd[n - 1]
    # Horner in Newton form: P = dd[n-1]; P = P*(z - x_i) + dd[i]
    size = 1
    for i in range(n - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs[:size]
        for j in range(size):
            shifted[j] -= xs[i] * coeffs[j]
        shifted[0] += dd[i]
        size += 1
        coeffs[:size] = shifted
    return coeffs[:size]


def wronskian_degree_bound(fs: Sequence[Poly]) -> int:
    m = len(fs)
    return sum(f.degree() for f in fs) - m * (m - 1) // 2


def _wronskian_bareiss(fs: Sequence[Poly]) -> Poly:
    m = len(fs)
    rows = []
    for f in fs:
        row = [f]
        for _ in range(1, m):
            row.append(row[-1].diff(z))
        rows.append(row)
    return determinant(rows)


def _wronskian_interpolate(fs: Sequence[Poly]) -> Poly:
    m = len(fs)
    bound = wronskian_degree_bound(fs)
    if bound < 0:
        return ZERO

    scale = 1
    derivs: list[list[list[int]]] = []
    for f in fs:
        denom, g = f.clear_denoms(convert=True)
        scale *= int(denom)
        row = [g]
        for _ in range(1, m):
            row.append(row[-1].diff(z))
        derivs.append([[int(c) for c in h.all_coeffs()] for h in row])

    xs = [t - bound // 2 for t in range(bound + 1)]
    ys = [
        _integer_determinant([[_horner(entry, x) for entry in row] for row in derivs])
        for x in xs
    ]
    coeffs = [c / scale for c in _newton_interpolate(xs, ys)]
    return poly(coeffs)


def wronskian(fs: Sequence[Poly], method: str = "auto") -> Poly:
    """
    Wronskian determinant det[D_z^j f_i] of a list of polynomials.

    Args:
        fs: The polynomials, one per row.
        method: ``"bareiss"`` for fraction-free elimination on the
            derivative matrix, ``"interpolate"`` for exact integer
            determinants at sample points followed by interpolation, or
            ``"auto"`` to pick interpolation once the predicted degree
            reaches ``MAYACHAINS_INTERP_DEGREE``.

    Returns:
        Poly: The exact Wronskian (possibly zero for dependent inputs).
    """
    if not fs:
        raise ValueError("wronskian needs at least one function")
    if method not in ("auto", "bareiss", "interpolate"):
        raise ValueError(f"unknown wronskian method: {method}")

    if method == "auto":
        threshold = get_settings().interpolation_degree
        use_interp = len(fs) >= 2 and wronskian_degree_bound(fs) >= threshold
        method = "interpolate" if use_interp else "bareiss"
        if use_interp:
            log.debug(f"Wronskian of {len(fs)} rows via interpolation")

    if method == "interpolate":
        return _wronskian_interpolate(fs)
    return _wronskian_bareiss(fs)


def hermite_wronskian(indices: Sequence[int], method: str = "auto") -> Poly:
    """Wr[H_{t_1}, …, H_{t_q}] in the given row order; 1 for an empty list."""
    if not indices:
        return ONE
    return wronskian([hermite(t) for t in indices], method=method)


# -----------------------------------------------------------------------------
# Rational functions
# -----------------------------------------------------------------------------
def _as_poly(value: Union["RationalFunction", Poly, Scalar]) -> "RationalFunction":
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Poly):
        return RationalFunction(value, ONE)
    if isinstance(value, (int, Fraction)):
        return RationalFunction(poly([value]), ONE)
    return NotImplemented


@dataclass(frozen=True)
class RationalFunction:
    """
    Quotient num/den of polynomials over Q in reduced normal form.

    The constructor cancels the gcd and makes the denominator monic, so
    structural equality is equality of rational functions.
    """

    num: Poly
    den: Poly = ONE

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = ZERO, ONE
        else:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num.exquo(g), den.exquo(g)
            lc = den.LC()
            if lc != 1:
                num, den = num.quo_ground(lc), den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, value: Scalar) -> "RationalFunction":
        return cls(poly([value]))

    @classmethod
    def identity(cls) -> "RationalFunction":
        """The function z."""
        return cls(Z)

    # -- predicates -----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of the zero rational function")
            return RationalFunction(self.den ** (-exponent), self.num ** (-exponent))
        return RationalFunction(self.num**exponent, self.den**exponent)

    # -- calculus and evaluation ---------------------------------------------
    def derivative(self) -> "RationalFunction":
        """Quotient rule; the result is reduced again."""
        if self.is_polynomial:
            return RationalFunction(self.num.diff(z), self.den)
        return RationalFunction(
            self.num.diff(z) * self.den - self.num * self.den.diff(z),
            self.den**2,
        )

    def scale(self, factor: Scalar) -> "RationalFunction":
        """Return z ↦ self(factor·z) for a rational factor."""
        arg = poly([0, factor])
        return RationalFunction(self.num.compose(arg), self.den.compose(arg))

    def evaluate(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        value = Rational(x.numerator, x.denominator)
        den = self.den.eval(value)
        if den == 0:
            raise ZeroDivisionError(f"pole at z = {x}")
        q = self.num.eval(value) / den
        return Fraction(int(q.p), int(q.q))

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.num.as_expr())
        return f"({self.num.as_expr()})/({self.den.as_expr()})"


def log_derivative(p: Poly) -> RationalFunction:
    """p′/p as a reduced rational function."""
    if p.is_zero:
        raise ZeroDivisionError("log-derivative of the zero polynomial")
    return RationalFunction(p.diff(z), p)
