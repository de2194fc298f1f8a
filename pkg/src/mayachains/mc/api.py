# -*- coding: utf-8 -*-
"""
api.py — FastAPI backend for MayaChains
---------------------------------------
Features:
- Lifespan startup: log the effective numerical settings.
- Enumerate admissible shifts and signatures of cyclic Maya diagrams.
- Solve: blocks → cycle → dressing chain → A_2n-Painlevé tuple (+ exact checks).
- Verify stored solve documents.
- Exact Hermite Wronskians and root atlases (files served from outputs/).
"""

from __future__ import annotations

import logging
from contextlib import asynccontextmanager
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import FileResponse

# Internal imports
from mayachains.mc.core.config import get_data_dirs, get_settings
from mayachains.mc.core.models import RootsRequest, SolveDocument, SolveRequest
from mayachains.mc.core.services.atlas import root_rows
from mayachains.mc.core.services.cache import cached_hermite_wronskian
from mayachains.mc.core.services.cyclic import (
    admissible_shifts,
    count_normalized_diagrams,
    enumerate_signatures,
)
from mayachains.mc.core.services.exactalg import coefficients
from mayachains.mc.core.services.runs import (
    parse_ints,
    roots_run,
    solve_document,
    verify_document,
)

# -----------------------------------------------------------------------------
# Logging
# -----------------------------------------------------------------------------
log = logging.getLogger("mayachains")

MEDIA_TYPES = {".csv": "text/csv", ".json": "application/json", ".svg": "image/svg+xml"}


# -----------------------------------------------------------------------------
# Lifespan (startup/shutdown)
# -----------------------------------------------------------------------------
@asynccontextmanager
async def lifespan(app: FastAPI):
    try:
        s = get_settings()
        log.info(
            f"Settings: precision={s.precision} max_precision={s.max_precision} "
            f"max_iterations={s.max_iterations} interpolation_degree={s.interpolation_degree}"
        )
    except ValueError as e:
        log.error(f"Invalid settings: {e}")
    yield


# -----------------------------------------------------------------------------
# FastAPI app
# -----------------------------------------------------------------------------
app = FastAPI(
    title="MayaChains API",
    version="0.2.0",
    lifespan=lifespan,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# -----------------------------------------------------------------------------
# Health
# -----------------------------------------------------------------------------
@app.get("/health")
def health():
    return {"status": "ok"}


# -----------------------------------------------------------------------------
# Enumeration
# -----------------------------------------------------------------------------
@app.get("/enumerate")
def enumerate_cycles(p: int, k: Optional[int] = None, bound: Optional[int] = None):
    try:
        shifts = admissible_shifts(p)
        if k is not None and k not in shifts:
            raise ValueError(f"k={k} is not an admissible shift for p={p}")
        families = {}
        for shift in shifts if k is None else [k]:
            sigs = enumerate_signatures(p, shift)
            if bound is None:
                families[str(shift)] = [list(s.parts) for s in sigs]
            else:
                families[str(shift)] = [
                    {"signature": list(s.parts), "count": count_normalized_diagrams(s, bound)}
                    for s in sigs
                ]
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from e
    return {"p": p, "shifts": list(shifts), "signatures": families}


# -----------------------------------------------------------------------------
# Solutions
# -----------------------------------------------------------------------------
@app.post("/solve")
def solve(req: SolveRequest):
    try:
        doc = solve_document(
            req.signature, req.n, req.perm, verify=req.verify, allow_any_perm=req.allow_any_perm
        )
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from e

    if doc.verification and not all(r.passed for r in doc.verification.values()):
        failed = [
            f"{name}:{c.name}[{c.index}]"
            for name, r in doc.verification.items()
            for c in r.failures()
        ]
        raise HTTPException(status_code=422, detail=f"Verification failed: {', '.join(failed)}")
    return doc


@app.post("/verify")
def verify(doc: SolveDocument):
    try:
        reports = verify_document(doc)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from e
    return {
        "passed": all(r.passed for r in reports.values()),
        "reports": {name: r.model_dump() for name, r in reports.items()},
    }


# -----------------------------------------------------------------------------
# Wronskians and roots
# -----------------------------------------------------------------------------
@app.get("/wronskian")
def wronskian(indices: str, use_cache: bool = True):
    try:
        idx = parse_ints(indices, "index list")
        if any(t < 0 for t in idx):
            raise ValueError(f"Hermite indices must be non-negative: {idx}")
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from e
    p = cached_hermite_wronskian(idx, use_cache=use_cache)
    return {
        "label": "Wr(" + ",".join(f"H_{t}" for t in idx) + ")" if idx else "1",
        "degree": p.degree(),
        "coefficients": [str(c) for c in coefficients(p)],
    }


@app.post("/roots")
def roots(req: RootsRequest):
    try:
        spec, rs, path = roots_run(
            req.signature,
            req.n,
            precision=req.precision,
            fmt=req.format,
            use_cache=req.use_cache,
        )
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from e
    return {
        "label": spec.label(),
        "output": path.name,
        "degree": rs.degree,
        "origin_multiplicity": rs.origin_multiplicity,
        "precision_bits": rs.precision_bits,
        "converged": rs.converged,
        "roots": [list(row) for row in root_rows(rs)],
    }


# -----------------------------------------------------------------------------
# Serve emitted files
# -----------------------------------------------------------------------------
@app.get("/outputs/{filename}")
def get_output(filename: str):
    _, outputs = get_data_dirs()
    if Path(filename).name != filename:
        raise HTTPException(status_code=404, detail="File not found.")
    fp = outputs / filename
    if not fp.exists():
        raise HTTPException(status_code=404, detail="File not found.")
    return FileResponse(fp, media_type=MEDIA_TYPES.get(fp.suffix, "application/octet-stream"))
