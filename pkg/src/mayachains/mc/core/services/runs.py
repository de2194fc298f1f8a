# -*- coding: utf-8 -*-
"""
runs.py — end-to-end pipelines shared by the CLI and the API
------------------------------------------------------------
- solve_document: blocks → cycle → chain → A_2n tuple (+ verification).
- verify_document: re-check a stored solve document.
- roots_run: family polynomial → roots → emitted file.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from mayachains.mc.core.config import get_data_dirs
from mayachains.mc.core.models import (
    Check,
    ChainModel,
    CycleModel,
    PainleveModel,
    QuadRationalFunctionModel,
    RationalFunctionModel,
    SolveDocument,
    VerificationReport,
)
from mayachains.mc.core.services.atlas import (
    FORMATS,
    RootSet,
    WronskianFamilySpec,
    emit,
    family_polynomial,
    find_roots,
)
from mayachains.mc.core.services.chain import (
    ChainSolution,
    chain_from_stored,
    chain_solution,
    verify_chain,
)
from mayachains.mc.core.services.cyclic import (
    KBlockCoordinates,
    MalformedCycleError,
    MayaCycle,
    Signature,
    build_cycle,
    normalized_blocks,
)
from mayachains.mc.core.services.maya import block_coordinates, xi
from mayachains.mc.core.services.painleve import PainleveSolution, to_painleve, verify_painleve

log = logging.getLogger("mayachains")


def parse_ints(text: str, what: str = "list") -> list[int]:
    """Parse ``"2,3,1,1"`` into integers.

    Permutations may also be written as digit strings, ``"34210"``.
    """
    body = text.strip().strip("()[]")
    if not body:
        return []
    if what == "permutation" and "," not in body and body.isdigit():
        return [int(ch) for ch in body]
    try:
        return [int(x) for x in body.split(",")]
    except ValueError as e:
        raise ValueError(f"bad {what} {text!r}: expected comma-separated integers") from e


def _signature(signature: Union[Signature, str, Sequence[int]]) -> Signature:
    if isinstance(signature, Signature):
        return signature
    if isinstance(signature, str):
        return Signature.parse(signature)
    return Signature(tuple(signature))


# -----------------------------------------------------------------------------
# Documents
# -----------------------------------------------------------------------------
def cycle_model(cycle: MayaCycle) -> CycleModel:
    return CycleModel(
        k=cycle.k,
        signature=list(cycle.signature.parts) if cycle.signature else None,
        blocks=[list(b) for b in cycle.blocks.blocks] if cycle.blocks else None,
        perm=list(cycle.perm) if cycle.perm is not None else None,
        flip_sites=list(cycle.flip_sites),
        signs=list(cycle.signs),
        lambdas=list(cycle.lambdas),
        a=list(cycle.a),
        diagrams=[list(block_coordinates(M)) for M in cycle.diagrams],
    )


def chain_model(sol: ChainSolution) -> ChainModel:
    return ChainModel(
        delta=int(sol.delta),
        a=[str(x) for x in sol.a],
        w=[RationalFunctionModel.of(w) for w in sol.w],
        hermite=sol.hermite_labels(),
    )


def painleve_model(ps: PainleveSolution) -> PainleveModel:
    return PainleveModel(
        n=ps.n,
        alpha=[str(x) for x in ps.alpha],
        c_squared=str(ps.c_squared),
        f=[QuadRationalFunctionModel.of(f) for f in ps.f],
    )


def solve_document(
    signature: Union[Signature, str, Sequence[int]],
    n: Sequence[int],
    perm: Sequence[int],
    verify: bool = False,
    allow_any_perm: bool = False,
) -> SolveDocument:
    """
    Build the cycle, chain and A_2n solution for normalized block data.

    Raises:
        ValueError: invalid signature, n-tuple or permutation.
    """
    sig = _signature(signature)
    blocks = normalized_blocks(sig, n)
    cycle = build_cycle(blocks, perm, require_normalized=not allow_any_perm)
    sol = chain_solution(cycle)
    ps = to_painleve(sol)
    doc = SolveDocument(cycle=cycle_model(cycle), chain=chain_model(sol), painleve=painleve_model(ps))
    if verify:
        doc.verification = {"chain": verify_chain(sol), "painleve": verify_painleve(ps)}
    return doc


def verify_document(doc: SolveDocument) -> dict[str, VerificationReport]:
    """
    Re-check the stored w, a, f and α of a solve document.

    The cycle is rebuilt from its stored diagrams and flip sites; the
    functions and weights are taken as stored. Flip data that no longer
    closes into a cycle is reported as a failed ``cycle`` check.
    """
    stored = doc.cycle
    if not stored.diagrams:
        raise ValueError("stored cycle has no diagrams")
    try:
        blocks = KBlockCoordinates(tuple(tuple(b) for b in stored.blocks)) if stored.blocks else None
        cycle = MayaCycle.from_flip_sites(
            xi(stored.diagrams[0]), stored.flip_sites, stored.k, blocks=blocks, perm=stored.perm
        )
    except MalformedCycleError as e:
        log.warning(f"Stored cycle is malformed: {e}")
        chain_report = VerificationReport(
            subject="chain", checks=[Check(name="cycle", passed=False, residual=[str(e)])]
        )
    else:
        sol = chain_from_stored(
            cycle,
            [w.to_value() for w in doc.chain.w],
            [Fraction(x) for x in doc.chain.a],
            Fraction(doc.chain.delta),
        )
        chain_report = verify_chain(sol)
    d = Fraction(doc.painleve.c_squared)
    ps = PainleveSolution(
        n=doc.painleve.n,
        f=tuple(f.to_value(d) for f in doc.painleve.f),
        alpha=tuple(Fraction(x) for x in doc.painleve.alpha),
        c_squared=d,
    )
    return {"chain": chain_report, "painleve": verify_painleve(ps)}


# -----------------------------------------------------------------------------
# Roots
# -----------------------------------------------------------------------------
def roots_run(
    signature: Union[Signature, str, Sequence[int]],
    n: Sequence[int],
    precision: Optional[int] = None,
    fmt: str = "csv",
    out: Optional[Path] = None,
    use_cache: bool = True,
) -> tuple[WronskianFamilySpec, RootSet, Path]:
    """family_polynomial → find_roots → emit; the default file goes to outputs/."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    spec = WronskianFamilySpec(_signature(signature), tuple(n))
    p = family_polynomial(spec, use_cache=use_cache)
    if p.degree() < 1:
        raise ValueError(f"{spec.label()} is constant; there are no roots to find")
    rs = find_roots(p, precision)
    if out is None:
        _, outputs = get_data_dirs()
        out = outputs / f"{spec.label()}.{fmt}"
    emit(rs, fmt, out, title=spec.label())
    return spec, rs, Path(out)
