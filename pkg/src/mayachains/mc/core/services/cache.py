# -*- coding: utf-8 -*-
"""
cache.py — on-disk cache of exact Hermite Wronskians
---------------------------------------------------
- Location: MAYACHAINS_CACHE_DIR, else the per-user cache dir
  (platformdirs) under ``wronskians/``.
- One text file per index list holding the ``[c0, c1, ...]`` form.
- I/O failures are logged and never fatal.
"""

from __future__ import annotations

import hashlib
import logging
import os
from pathlib import Path
from typing import Sequence

from platformdirs import PlatformDirs
from sympy import Poly

from mayachains.mc.core.config import APP_AUTHOR, APP_NAME
from mayachains.mc.core.services.exactalg import hermite_wronskian, poly_from_text, poly_text

log = logging.getLogger("mayachains")


def cache_dir() -> Path:
    """Return the Wronskian cache directory (created on demand)."""
    env = os.getenv("MAYACHAINS_CACHE_DIR")
    if env:
        p = Path(env)
    else:
        p = Path(PlatformDirs(APP_NAME, APP_AUTHOR).user_cache_dir) / "wronskians"
    p.mkdir(parents=True, exist_ok=True)
    return p


def _cache_name(indices: Sequence[int]) -> str:
    key = "-".join(str(t) for t in indices)
    if len(key) > 120:
        key = hashlib.sha256(key.encode()).hexdigest()
    return f"wr_{key}.txt"


def cached_hermite_wronskian(indices: Sequence[int], use_cache: bool = True) -> Poly:
    """
    Wr[H_t for t in indices], read from or written to the cache.

    Args:
        indices: Hermite degrees in row order.
        use_cache: Skip the disk entirely when False.
    """
    indices = tuple(int(t) for t in indices)
    if not use_cache:
        return hermite_wronskian(indices)

    try:
        fp = cache_dir() / _cache_name(indices)
    except OSError as e:
        log.warning(f"Wronskian cache unavailable: {e}")
        return hermite_wronskian(indices)

    if fp.exists():
        try:
            body = fp.read_text(encoding="utf-8")
            idx_line, _, coeff_line = body.partition("\n")
            if idx_line.strip() == ",".join(map(str, indices)):
                log.info(f"Cache hit: {fp.name}")
                return poly_from_text(coeff_line)
            log.warning(f"Cache entry {fp.name} belongs to another index list; recomputing")
        except (OSError, ValueError) as e:
            log.warning(f"Unreadable cache entry {fp}: {e}")

    log.info(f"Cache miss: computing Wronskian of {len(indices)} Hermite polynomials")
    result = hermite_wronskian(indices)
    try:
        fp.write_text(",".join(map(str, indices)) + "\n" + poly_text(result) + "\n", encoding="utf-8")
    except OSError as e:
        log.warning(f"Failed to write cache entry {fp}: {e}")
    return result
