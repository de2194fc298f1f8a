"""
models.py — JSON documents exchanged by the CLI and the API
-----------------------------------------------------------
Rationals are written as strings (``"-4/3"``) so nothing is lost to floats.
Polynomials are ascending coefficient lists; coefficients over Q(c) are
``[a, b]`` pairs meaning a + b·c.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, Field

from mayachains.mc.core.services.exactalg import RationalFunction, coefficients, poly
from mayachains.mc.core.services.quadext import (
    QuadRationalFunction,
    quad_poly_from_pairs,
)


# -----------------------------------------------------------------------------
# Verification reports
# -----------------------------------------------------------------------------
class Check(BaseModel):
    name: str
    index: Optional[int] = None
    passed: bool
    residual: list = Field(default_factory=list)


class VerificationReport(BaseModel):
    subject: Literal["chain", "painleve", "eigenfunction"]
    checks: list[Check] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


# -----------------------------------------------------------------------------
# Values
# -----------------------------------------------------------------------------
class RationalFunctionModel(BaseModel):
    num: list[str]
    den: list[str]

    @classmethod
    def of(cls, rf: RationalFunction) -> "RationalFunctionModel":
        return cls(
            num=[str(c) for c in coefficients(rf.num)],
            den=[str(c) for c in coefficients(rf.den)],
        )

    def to_value(self) -> RationalFunction:
        try:
            return RationalFunction(
                poly(Fraction(c) for c in self.num), poly(Fraction(c) for c in self.den)
            )
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"bad rational function: {e}") from e


class QuadRationalFunctionModel(BaseModel):
    num: list[tuple[str, str]]
    den: list[tuple[str, str]]

    @classmethod
    def of(cls, f: QuadRationalFunction) -> "QuadRationalFunctionModel":
        num, den = f.as_fraction()
        return cls(num=num.pairs(), den=den.pairs())

    def to_value(self, d: Fraction) -> QuadRationalFunction:
        num = quad_poly_from_pairs(self.num, d)
        den = quad_poly_from_pairs(self.den, d)
        if den.is_zero:
            raise ValueError("zero denominator")
        return QuadRationalFunction.from_fraction(num, den)


class CycleModel(BaseModel):
    k: int
    signature: Optional[list[int]] = None
    blocks: Optional[list[list[int]]] = None
    perm: Optional[list[int]] = None
    flip_sites: list[int]
    signs: list[int]
    lambdas: list[int]
    a: list[int]
    diagrams: list[list[int]]


class ChainModel(BaseModel):
    delta: int
    a: list[str]
    w: list[RationalFunctionModel]
    hermite: list[str]


class PainleveModel(BaseModel):
    n: int
    alpha: list[str]
    c_squared: str
    f: list[QuadRationalFunctionModel]


class SolveDocument(BaseModel):
    cycle: CycleModel
    chain: ChainModel
    painleve: PainleveModel
    verification: Optional[dict[str, VerificationReport]] = None


# -----------------------------------------------------------------------------
# Requests (API)
# -----------------------------------------------------------------------------
class SolveRequest(BaseModel):
    signature: str
    n: list[int]
    perm: list[int]
    verify: bool = False
    allow_any_perm: bool = False


class RootsRequest(BaseModel):
    signature: str
    n: list[int]
    precision: Optional[int] = Field(None, ge=53)
    format: Literal["csv", "json", "svg"] = "csv"
    use_cache: bool = True
