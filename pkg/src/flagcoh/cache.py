"""On-disk JSON cache of quotient bases and Betti numbers.

Entries are keyed by the SHA-256 of the presentation text and the cap, so a
hit requires an exact match of both. The directory defaults to
``~/.cache/flagcoh`` and can be moved with ``FLAGCOH_CACHE``.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .cohomology import QuotientRing, RingPresentation, quotient
from .polyring import format_polynomial

CACHE_VERSION = 1


def cache_dir() -> Path:
    return Path(os.environ.get("FLAGCOH_CACHE") or Path.home() / ".cache" / "flagcoh")


def cache_key(p: RingPresentation, cap: int) -> str:
    text = f"v{CACHE_VERSION}|cap={cap}|{p.canonical_text()}"
    return hashlib.sha256(text.encode()).hexdigest()


def _entry(ring: QuotientRing, key: str) -> dict:
    return {
        "schema_version": CACHE_VERSION,
        "key": key,
        "label": ring.presentation.label,
        "cap": ring.cap,
        "complete": ring.complete,
        "betti": ring.betti,
        "basis": [[format_polynomial(m) for m in ring.basis(d)] for d in range(ring.top_degree + 1)],
    }


def cached_betti(p: RingPresentation, cap: int, use_cache: bool = True) -> tuple[dict, str]:
    """Return the cache entry for (p, cap) and ``"hit"``, ``"miss"`` or ``"off"``."""
    key = cache_key(p, cap)
    if not use_cache:
        return _entry(quotient(p, cap), key), "off"
    path = cache_dir() / f"{key}.json"
    try:
        data = json.loads(path.read_text())
        if data.get("schema_version") == CACHE_VERSION and data.get("key") == key:
            return data, "hit"
    except (OSError, ValueError):
        pass
    data = _entry(quotient(p, cap), key)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(data, indent=1))
        tmp.replace(path)
    except OSError:
        return data, "miss (not written)"
    return data, "miss"
