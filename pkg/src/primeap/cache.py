"""Binary cache for expensive artifacts, one file per (kind, q).

Layout: a fixed header {magic, version, q, ceiling, payload checksum}
followed by fixed-width records (little-endian u64).  The checksum is
verified on load; a stale, corrupt, or mismatched file is ignored and the
artifact recomputed.
"""

from __future__ import annotations

import os
import struct
import zlib
from pathlib import Path

import numpy as np

from .apstats import LeastPrimeTable, least_primes, reduced_residues

MAGIC = b"PAPC"
VERSION = 1
_HEADER = struct.Struct("<4sIQQI")

CACHE_DIR_ENV = "PRIMEAP_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_DIR_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "primeap"


def _table_path(cache_dir: Path, q: int) -> Path:
    return cache_dir / f"least-primes-q{q}.bin"


def save_least_primes(table: LeastPrimeTable, cache_dir: Path) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    payload = table.least.astype("<u8").tobytes()
    header = _HEADER.pack(MAGIC, VERSION, table.q, table.scan_ceiling,
                          zlib.crc32(payload))
    path = _table_path(cache_dir, table.q)
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(header + payload)
    tmp.replace(path)
    return path


def load_least_primes(q: int, cache_dir: Path) -> LeastPrimeTable | None:
    """Return the cached table, or None if absent or invalid."""
    path = _table_path(cache_dir, q)
    if not path.is_file():
        return None
    blob = path.read_bytes()
    if len(blob) < _HEADER.size:
        return None
    magic, version, q_stored, ceiling, checksum = _HEADER.unpack_from(blob)
    payload = blob[_HEADER.size:]
    if (magic != MAGIC or version != VERSION or q_stored != q
            or zlib.crc32(payload) != checksum):
        return None
    residues = reduced_residues(q)
    least = np.frombuffer(payload, dtype="<u8").astype(np.int64)
    if len(least) != len(residues):
        return None
    return LeastPrimeTable(q, residues, least, int(ceiling))


def get_least_primes(q: int, ceiling: int | None = None,
                     cache_dir: Path | None = None) -> LeastPrimeTable:
    """Cached least-prime lookup; recomputes and stores on any miss."""
    cache_dir = cache_dir or default_cache_dir()
    cached = load_least_primes(q, cache_dir)
    if cached is not None:
        return cached
    table = least_primes(q, ceiling)
    try:
        save_least_primes(table, cache_dir)
    except OSError:
        pass  # cache is best-effort; the computed table is still good
    return table
