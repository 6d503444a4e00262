"""Sequence file formats.

Text mode: whitespace/newline-separated decimal literals.
Binary mode: magic b"OPSQ", one element-type byte (0=i32, 1=i64, 2=f64),
an 8-byte little-endian element count, then packed little-endian elements.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .core import as_sequence

__all__ = ["read_sequence", "write_sequence"]

MAGIC = b"OPSQ"

_CODE_FOR_DTYPE = {np.dtype(np.int32): 0, np.dtype(np.int64): 1, np.dtype(np.float64): 2}
_WIRE_FOR_CODE = {0: "<i4", 1: "<i8", 2: "<f8"}


def write_sequence(path, x, mode: str = "binary") -> None:
    """Write a sequence in text or binary mode."""
    x = as_sequence(x)
    path = Path(path)
    if mode == "text":
        path.write_text("\n".join(repr(v) for v in x.tolist()) + "\n")
        return
    if mode != "binary":
        raise ValueError(f"unknown mode {mode!r}")
    code = _CODE_FOR_DTYPE[x.dtype]
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(bytes([code]))
        fh.write(struct.pack("<Q", x.size))
        fh.write(np.ascontiguousarray(x, dtype=_WIRE_FOR_CODE[code]).tobytes())


def read_sequence(path) -> np.ndarray:
    """Read a sequence file, auto-detecting the format by its magic bytes."""
    path = Path(path)
    raw = path.read_bytes()
    if raw[:4] == MAGIC:
        return _read_binary(raw, path)
    tokens = raw.decode("utf-8").split()
    if not tokens:
        raise ValueError(f"{path}: empty sequence file")
    try:
        return as_sequence([int(t) for t in tokens], dtype=np.int64)
    except ValueError:
        return as_sequence([float(t) for t in tokens], dtype=np.float64)


def _read_binary(raw: bytes, path: Path) -> np.ndarray:
    if len(raw) < 13:
        raise ValueError(f"{path}: truncated header")
    code = raw[4]
    if code not in _WIRE_FOR_CODE:
        raise ValueError(f"{path}: unknown element-type code {code}")
    (count,) = struct.unpack("<Q", raw[5:13])
    wire = np.dtype(_WIRE_FOR_CODE[code])
    expected = 13 + count * wire.itemsize
    if len(raw) != expected:
        raise ValueError(f"{path}: expected {expected} bytes, found {len(raw)}")
    return as_sequence(np.frombuffer(raw, dtype=wire, count=count, offset=13))
