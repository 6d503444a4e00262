"""Deterministic synthetic corpora for benchmarking.

Two text families:

* rand-delta: i.i.d. uniform integers in [100 - delta, 100 + delta]
* period-delta: a fixed period-10 profile plus uniform noise in
  [-delta, +delta], clamped to [0, 200 + delta]

All draws come from numpy's PCG64 generator seeded explicitly, so every
(n, delta, seed) triple reproduces bit-identical corpora.
"""

from __future__ import annotations

import numpy as np

from .core import as_sequence

__all__ = ["PERIOD_PROFILE", "element_dtype", "gen_rand_delta", "gen_period_delta", "extract_patterns"]

# Period-10 base profile.  The repeated levels (0 at phases 0/4/8, 80 at
# 1/3/5/7, 160 at 2/6) put equal-valued elements at offsets 2 and 4 of one
# another, so small-delta noise still decides many within-window
# comparisons; a strictly stepped wave would make every comparison
# deterministic at small delta and the filters would have nothing to rank.
PERIOD_PROFILE = np.array([0, 80, 160, 80, 0, 80, 160, 80, 0, 200], dtype=np.int64)

_DTYPES = {"i32": np.int32, "i64": np.int64, "f64": np.float64}


def element_dtype(domain: str):
    try:
        return _DTYPES[domain]
    except KeyError:
        raise ValueError(f"unknown element domain {domain!r}") from None


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_rand_delta(n: int, delta: int, seed: int, domain: str = "i32") -> np.ndarray:
    """Uniform random text around 100 with variability delta."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= delta <= 100:
        raise ValueError("delta must be in [0, 100] so values stay non-negative")
    vals = _rng(seed).integers(100 - delta, 100 + delta, size=n, endpoint=True)
    return vals.astype(element_dtype(domain))


def gen_period_delta(n: int, delta: int, seed: int, domain: str = "i32") -> np.ndarray:
    """Noisy periodic text: profile(i mod 10) + uniform(-delta, delta),
    clamped to [0, 200 + delta]."""
    if n < 1:
        raise ValueError("n must be positive")
    if delta < 0:
        raise ValueError("delta must be non-negative")
    vals = PERIOD_PROFILE[np.arange(n) % 10]
    if delta > 0:
        vals = vals + _rng(seed).integers(-delta, delta, size=n, endpoint=True)
        np.clip(vals, 0, 200 + delta, out=vals)
    return vals.astype(element_dtype(domain))


def extract_patterns(y, m: int, count: int, seed: int) -> list[np.ndarray]:
    """Draw ``count`` length-m windows of y at uniform random starts."""
    y = as_sequence(y)
    if m > y.size:
        raise ValueError(f"pattern length {m} exceeds text length {y.size}")
    if count < 1:
        raise ValueError("count must be positive")
    starts = _rng(seed).integers(0, y.size - m, size=count, endpoint=True)
    return [y[s : s + m].copy() for s in starts]
