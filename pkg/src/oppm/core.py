"""Order relations on numeric sequences: rank tables and isomorphism checks.

Two equal-length sequences are *order isomorphic* when every pairwise
``<=`` comparison gives the same answer in both.  A pattern is preprocessed
once into a rank table (its stable argsort plus an adjacent-equality
bitmap); any text window can then be checked against it in O(m).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "as_sequence",
    "RankTable",
    "rank_table",
    "is_isomorphic_at",
    "verify_positions",
    "brute_force_isomorphic",
]

_INT_DTYPES = (np.dtype(np.int32), np.dtype(np.int64))
_FLOAT_DTYPE = np.dtype(np.float64)


def as_sequence(values, dtype=None) -> np.ndarray:
    """Coerce ``values`` to a 1-d numeric array (i32, i64 or f64).

    Rejects NaN elements: they are not comparable under a total order.
    """
    arr = np.asarray(values, dtype=dtype)
    if arr.ndim != 1:
        raise ValueError(f"sequence must be one-dimensional, got shape {arr.shape}")
    if arr.dtype in _INT_DTYPES or arr.dtype == _FLOAT_DTYPE:
        pass
    elif arr.dtype.kind in "iub":
        arr = arr.astype(np.int64)
    elif arr.dtype.kind == "f":
        arr = arr.astype(np.float64)
    else:
        raise TypeError(f"unsupported element dtype {arr.dtype}")
    if arr.dtype.kind == "f" and np.isnan(arr).any():
        raise ValueError("NaN elements are not totally ordered")
    return arr


@dataclass(frozen=True)
class RankTable:
    """Preprocessed ordering of a pattern.

    ``r`` is the stable argsort of the pattern (ties keep source order),
    ``eq[i]`` flags that the i-th and (i+1)-th smallest elements are equal.
    """

    r: np.ndarray = field(repr=False)
    eq: np.ndarray = field(repr=False)
    m: int = 0


def rank_table(x) -> RankTable:
    """Build the rank table of a pattern.

    Raises ValueError on an empty pattern.
    """
    x = as_sequence(x)
    if x.size == 0:
        raise ValueError("empty pattern")
    r = np.argsort(x, kind="stable")
    s = x[r]
    eq = (s[1:] == s[:-1]).astype(np.uint8)
    return RankTable(r=r, eq=eq, m=int(x.size))


def is_isomorphic_at(rt: RankTable, y, i: int) -> bool:
    """True iff the window ``y[i : i + rt.m]`` is order isomorphic to the
    pattern behind ``rt``.

    Walks the window in the pattern's sorted order: consecutive elements
    must strictly increase exactly where the pattern's did, and tie exactly
    where the pattern tied.
    """
    y = as_sequence(y)
    if i < 0 or i + rt.m > y.size:
        raise IndexError("window exceeds text")
    w = y[i + rt.r]
    a, b = w[:-1], w[1:]
    ok = np.where(rt.eq.astype(bool), a == b, a < b)
    return bool(ok.all())


def verify_positions(rt: RankTable, y: np.ndarray, positions) -> np.ndarray:
    """Vectorised form of is_isomorphic_at over many candidate positions.

    Returns a boolean array aligned with ``positions``.  ``y`` must already
    be a validated array and every window must fit.
    """
    positions = np.asarray(positions, dtype=np.int64)
    if positions.size == 0:
        return np.zeros(0, dtype=bool)
    w = y[positions[:, None] + rt.r[None, :]]
    a, b = w[:, :-1], w[:, 1:]
    eq = rt.eq.astype(bool)[None, :]
    return np.where(eq, a == b, a < b).all(axis=1)


def brute_force_isomorphic(x, y) -> bool:
    """Pairwise-comparison oracle for order isomorphism.

    Checks the defining biconditional x[i] <= x[j] <=> y[i] <= y[j] over
    all index pairs; O(m^2) and deliberately independent of rank tables.
    A length mismatch returns False.
    """
    x = as_sequence(x)
    y = as_sequence(y)
    if x.size != y.size:
        return False
    lx = x[:, None] <= x[None, :]
    ly = y[:, None] <= y[None, :]
    return bool((lx == ly).all())
