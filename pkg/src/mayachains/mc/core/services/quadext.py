# -*- coding: utf-8 -*-
"""
quadext.py — arithmetic in Q(c) with c² = d ∈ Q
-----------------------------------------------
- QuadExt: scalars a + b·c with exact Fraction parts.
- QuadPoly: dense polynomials with QuadExt coefficients (export only).
- QuadRationalFunction: elements of Q(c)(z) stored as G + c·H with
  G, H reduced rational functions over Q, so every gcd runs over Q.
- scale_argument: z ↦ f(γz) for f over Q and γ ∈ Q(c).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from sympy import Poly

from mayachains.mc.core.services.exactalg import (
    ZERO,
    RationalFunction,
    coefficients,
    poly,
)

Scalar = Union[int, Fraction]


# -----------------------------------------------------------------------------
# Scalars
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class QuadExt:
    """a + b·c where c² = d."""

    a: Fraction
    b: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "d", Fraction(self.d))

    @classmethod
    def generator(cls, d: Scalar) -> "QuadExt":
        """The element c itself."""
        return cls(0, 1, d)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"mixing Q(c) with c²={self.d} and c²={other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(
            self.a * other.a + self.d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError(f"{other} is not invertible in Q(c)")
        q = self * other.conjugate()
        return QuadExt(q.a / n, q.b / n, self.d)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> "QuadExt":
        if exponent < 0:
            return QuadExt(1, 0, self.d) / (self ** (-exponent))
        result = QuadExt(1, 0, self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        bpart = "c" if self.b == 1 else "-c" if self.b == -1 else f"{self.b}*c"
        if self.a == 0:
            return bpart
        sign = "-" if bpart.startswith("-") else "+"
        return f"{self.a} {sign} {bpart.lstrip('-')}"


# -----------------------------------------------------------------------------
# Polynomials over Q(c)
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class QuadPoly:
    """Dense polynomial with QuadExt coefficients, ascending, no trailing zeros."""

    coeffs: tuple[QuadExt, ...]
    d: Fraction

    def __post_init__(self) -> None:
        cs = [c if isinstance(c, QuadExt) else QuadExt(c, 0, self.d) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "d", Fraction(self.d))

    @classmethod
    def from_pair(cls, a: Poly, b: Poly, d: Scalar) -> "QuadPoly":
        """The polynomial a + c·b for a, b over Q."""
        ca, cb = coefficients(a), coefficients(b)
        size = max(len(ca), len(cb))
        ca += [Fraction(0)] * (size - len(ca))
        cb += [Fraction(0)] * (size - len(cb))
        return cls(tuple(QuadExt(x, y, d) for x, y in zip(ca, cb)), Fraction(d))

    def split(self) -> tuple[Poly, Poly]:
        """Return (A, B) over Q with self = A + c·B."""
        return poly(c.a for c in self.coeffs), poly(c.b for c in self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "QuadPoly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        return QuadPoly(tuple(c / lead for c in self.coeffs), self.d)

    def divmod(self, other: "QuadPoly") -> tuple["QuadPoly", "QuadPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        quot = [QuadExt(0, 0, self.d)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for shift in range(len(rem) - len(other.coeffs), -1, -1):
            factor = rem[shift + len(other.coeffs) - 1] / lead
            quot[shift] = factor
            if factor:
                for j, c in enumerate(other.coeffs):
                    rem[shift + j] = rem[shift + j] - factor * c
        return QuadPoly(tuple(quot), self.d), QuadPoly(tuple(rem), self.d)

    def gcd(self, other: "QuadPoly") -> "QuadPoly":
        """Monic gcd by the Euclidean algorithm over Q(c)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def pairs(self) -> list[tuple[str, str]]:
        """Coefficient pairs (a, b) as strings, ascending degree."""
        return [(str(c.a), str(c.b)) for c in self.coeffs]


# -----------------------------------------------------------------------------
# Rational functions over Q(c)
# -----------------------------------------------------------------------------
def _quotient(num_a: Poly, num_b: Poly, den_a: Poly, den_b: Poly, d: Fraction):
    """(A + cB)/(C + cD) rewritten as G + cH with G, H over Q."""
    dq = poly([d])
    norm = den_a**2 - den_b**2 * dq
    if norm.is_zero:
        raise ZeroDivisionError("division by the zero function over Q(c)")
    g = RationalFunction(num_a * den_a - num_b * den_b * dq, norm)
    h = RationalFunction(num_b * den_a - num_a * den_b, norm)
    return g, h


@dataclass(frozen=True)
class QuadRationalFunction:
    """
    Element G + c·H of Q(c)(z), c² = d, with G and H reduced over Q.

    The pair (G, H) is unique, so dataclass equality is equality of
    functions.
    """

    g: RationalFunction
    h: RationalFunction
    d: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", Fraction(self.d))

    # -- constructors ---------------------------------------------------------
    @classmethod
    def from_rational(cls, rf: RationalFunction, d: Scalar) -> "QuadRationalFunction":
        return cls(rf, RationalFunction.constant(0), Fraction(d))

    @classmethod
    def constant(cls, value: Union[QuadExt, Scalar], d: Scalar) -> "QuadRationalFunction":
        if not isinstance(value, QuadExt):
            value = QuadExt(value, 0, d)
        elif value.d != Fraction(d):
            raise ValueError(f"mixing Q(c) with c²={value.d} and c²={d}")
        return cls(
            RationalFunction.constant(value.a), RationalFunction.constant(value.b), Fraction(d)
        )

    @classmethod
    def from_fraction(cls, num: QuadPoly, den: QuadPoly) -> "QuadRationalFunction":
        """Build num/den for polynomials over Q(c)."""
        if num.d != den.d and not (num.is_zero or den.is_zero):
            raise ValueError(f"mixing Q(c) with c²={num.d} and c²={den.d}")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        na, nb = num.split()
        da, db = den.split()
        g, h = _quotient(na, nb, da, db, den.d)
        return cls(g, h, den.d)

    # -- predicates -----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.g.is_zero and self.h.is_zero

    @property
    def is_rational(self) -> bool:
        """True when the function lies in Q(z)."""
        return self.h.is_zero

    def _coerce(self, other) -> "QuadRationalFunction":
        if isinstance(other, QuadRationalFunction):
            if other.d != self.d:
                raise ValueError(f"mixing Q(c) with c²={self.d} and c²={other.d}")
            return other
        if isinstance(other, RationalFunction):
            return QuadRationalFunction.from_rational(other, self.d)
        if isinstance(other, (int, Fraction, QuadExt)):
            return QuadRationalFunction.constant(other, self.d)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadRationalFunction(self.g + other.g, self.h + other.h, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadRationalFunction":
        return QuadRationalFunction(-self.g, -self.h, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadRationalFunction(self.g - other.g, self.h - other.h, self.d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational:
            return QuadRationalFunction(self.g * other.g, self.h * other.g, self.d)
        if self.is_rational:
            return QuadRationalFunction(self.g * other.g, self.g * other.h, self.d)
        return QuadRationalFunction(
            self.g * other.g + self.h * other.h * self.d,
            self.g * other.h + self.h * other.g,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadRationalFunction":
        """(G − cH)/(G² − dH²)."""
        if self.is_zero:
            raise ZeroDivisionError("division by the zero function over Q(c)")
        norm = self.g * self.g - self.h * self.h * self.d
        return QuadRationalFunction(self.g / norm, -self.h / norm, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def derivative(self) -> "QuadRationalFunction":
        return QuadRationalFunction(self.g.derivative(), self.h.derivative(), self.d)

    def compose_scaled(self, gamma: QuadExt) -> "QuadRationalFunction":
        """Return z ↦ self(γz) for γ ∈ Q(c)."""
        g = scale_argument(self.g, gamma)
        h = scale_argument(self.h, gamma)
        return g + h * QuadExt.generator(self.d)

    def to_rational(self) -> RationalFunction:
        if not self.is_rational:
            raise ValueError("function has a non-zero c-component")
        return self.g

    # -- export ---------------------------------------------------------------
    def as_fraction(self) -> tuple[QuadPoly, QuadPoly]:
        """
        Reduced numerator and monic denominator over Q(c).

        Any common factor of N = Na + c·Nb and the rational denominator L
        divides gcd_Q(Na² − d·Nb², L), so the Q(c) Euclid only runs on
        that (usually trivial) factor.
        """
        d = self.d
        den = self.g.den.lcm(self.h.den)
        na = self.g.num * den.exquo(self.g.den)
        nb = self.h.num * den.exquo(self.h.den)
        num_q = QuadPoly.from_pair(na, nb, d)
        den_q = QuadPoly.from_pair(den, ZERO, d)
        if num_q.is_zero:
            return num_q, QuadPoly((QuadExt(1, 0, d),), d)

        common = (na**2 - nb**2 * poly([d])).gcd(den)
        if common.degree() > 0:
            common_q = QuadPoly.from_pair(common, ZERO, d)
            g = common_q.gcd(num_q.divmod(common_q)[1])
            if g.degree > 0:
                num_q = num_q.divmod(g)[0]
                den_q = den_q.divmod(g)[0]

        lead = den_q.coeffs[-1]
        num_q = QuadPoly(tuple(c / lead for c in num_q.coeffs), d)
        den_q = den_q.monic()
        return num_q, den_q

    def __str__(self) -> str:
        if self.h.is_zero:
            return str(self.g)
        if self.g.is_zero:
            return f"c*{self.h}"
        return f"{self.g} + c*{self.h}"


def scale_argument(f: RationalFunction, gamma: QuadExt) -> QuadRationalFunction:
    """
    Return z ↦ f(γz) over Q(c).

    Coefficient j picks up γ^j; even powers of a pure γ = e·c land in Q.
    """
    powers: list[QuadExt] = []
    acc = QuadExt(1, 0, gamma.d)
    size = max(len(coefficients(f.num)), len(coefficients(f.den)))
    for _ in range(size):
        powers.append(acc)
        acc = acc * gamma

    def lift(p: Poly) -> QuadPoly:
        return QuadPoly(tuple(pw * c for pw, c in zip(powers, coefficients(p))), gamma.d)

    return QuadRationalFunction.from_fraction(lift(f.num), lift(f.den))


def quad_sum(items: Iterable[QuadRationalFunction], d: Scalar) -> QuadRationalFunction:
    total = QuadRationalFunction.constant(0, d)
    for item in items:
        total = total + item
    return total


def quad_poly_from_pairs(pairs: Sequence[Sequence[str]], d: Scalar) -> QuadPoly:
    """Inverse of ``QuadPoly.pairs``."""
    try:
        return QuadPoly(tuple(QuadExt(Fraction(a), Fraction(b), d) for a, b in pairs), Fraction(d))
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise ValueError(f"bad Q(c) coefficient list: {e}") from e
