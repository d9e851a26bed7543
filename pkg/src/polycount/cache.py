"""Persistent cache of exact count tables, one JSON file per (k, n, m).

Counts are serialized as decimal strings so values of any size round-trip
losslessly.  Writes go through a temp file and an atomic rename.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from pathlib import Path

from .errors import ParameterError
from .lattice import CountTable, LatticeSpec

ENV_VAR = "POLYCOUNT_CACHE"
FORMAT_VERSION = 1


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    """Cache directory: explicit flag, else $POLYCOUNT_CACHE, else platform default."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    if sys.platform == "darwin":
        base = Path.home() / "Library" / "Caches"
    elif os.name == "nt":
        base = Path(os.environ.get("LOCALAPPDATA", Path.home() / "AppData" / "Local"))
    else:
        base = Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache"))
    return base / "polycount"


def entry_path(cache_dir: Path, k: int, n: int, m: int) -> Path:
    return cache_dir / f"k{k}_n{n}_m{m}.json"


def entry_payload(table: CountTable) -> dict:
    spec = table.spec
    return {
        "version": FORMAT_VERSION,
        "k": spec.k,
        "n": spec.n,
        "m": spec.m,
        "counts": [str(c) for c in table.counts],
    }


def save_entry(cache_dir: Path, table: CountTable) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    spec = table.spec
    path = entry_path(cache_dir, spec.k, spec.n, spec.m)
    data = json.dumps(entry_payload(table), sort_keys=True, indent=None)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path


def load_entry(cache_dir: Path, k: int, n: int, m: int) -> CountTable | None:
    """Load a full table, or None on miss/stale/partial entries."""
    path = entry_path(cache_dir, k, n, m)
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return None
    if data.get("version") != FORMAT_VERSION:
        return None
    if (data.get("k"), data.get("n"), data.get("m")) != (k, n, m):
        raise ParameterError(f"cache entry {path} does not match its key")
    spec = LatticeSpec(n=n, m=m, k=k)
    counts = tuple(int(c) for c in data["counts"])
    if len(counts) != spec.capacity + 1:
        return None  # partial entry from an older truncated run
    return CountTable(spec=spec, counts=counts)
