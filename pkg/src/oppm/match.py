"""Exact matching of condensed sequences.

The workhorse is an SBNDM2-style bit-parallel scanner: the window is read
right to left through a nondeterministic factor automaton held in one
machine word, entered via a 2-gram test so mismatching windows are skipped
in a single step.  A naive sliding-window matcher doubles as the oracle
and as the fallback for patterns too short for the engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .filters import CondensedSequence

__all__ = ["WORD_BITS", "MatcherProgram", "compile_pattern", "find_candidates", "naive_find"]

WORD_BITS = 64


@dataclass(eq=False)
class MatcherProgram:
    """Compiled scan state for one condensed pattern.

    ``masks[c]`` has bit ``effective_len - 1 - i`` set for every position i
    (below ``effective_len``) where the pattern symbol equals c.
    """

    pattern: CondensedSequence
    masks: np.ndarray = field(repr=False)
    effective_len: int = 0
    full_len: int = 0


def compile_pattern(p: CondensedSequence) -> MatcherProgram:
    """Build the per-symbol mask table; O(alphabet + pattern length).

    Patterns longer than the machine word are truncated for the scan and
    re-checked symbol-wise per candidate.  Raises ValueError below the
    engine's 2-symbol minimum (callers fall back to naive_find).
    """
    full = len(p)
    if full < 2:
        raise ValueError("pattern too short for engine")
    if p.alphabet_size > 1 << 16:
        raise ValueError(f"alphabet size {p.alphabet_size} exceeds 2**16")
    eff = min(full, WORD_BITS)
    masks = np.zeros(p.alphabet_size, dtype=np.uint64)
    for i in range(eff):
        masks[p.symbols[i]] |= np.uint64(1) << np.uint64(eff - 1 - i)
    return MatcherProgram(pattern=p, masks=masks, effective_len=eff, full_len=full)


def _sbndm2_scan(t, masks, m):  # pragma: no cover - replaced by jit when available
    n = t.shape[0]
    out = np.empty(n - m + 1, dtype=np.int64)
    k = 0
    one = np.uint64(1)
    zero = np.uint64(0)
    hi = one << np.uint64(m - 1)
    j = 0
    while j <= n - m:
        D = (masks[t[j + m - 1]] << one) & masks[t[j + m - 2]]
        if D == zero:
            j += m - 1
            continue
        if m == 2:
            if D & hi:
                out[k] = j
                k += 1
            j += 1
            continue
        i = m - 3
        while True:
            D = (D << one) & masks[t[j + i]]
            if D == zero:
                # t[j+i .. j+m-1] is not a pattern factor: no occurrence
                # can start at or before j+i
                j += i + 1
                break
            if i == 0:
                if D & hi:
                    out[k] = j
                    k += 1
                j += 1
                break
            i -= 1
    return out[:k]


_scan_py = _sbndm2_scan
try:
    from numba import njit

    _sbndm2_scan = njit(cache=True)(_scan_py)
except ImportError:  # plain-python scan is identical, just slower
    pass


def naive_find(p: CondensedSequence, t: CondensedSequence) -> np.ndarray:
    """All positions where p occurs in t, overlaps included.

    Direct sliding-window comparison; serves as the oracle for the
    bit-parallel engine.
    """
    if p.alphabet_size != t.alphabet_size:
        raise ValueError("pattern and text use different condensed alphabets")
    m, n = len(p), len(t)
    if m == 0:
        raise ValueError("empty condensed pattern")
    if n < m:
        return np.zeros(0, dtype=np.int64)
    hits = np.ones(n - m + 1, dtype=bool)
    for k in range(m):
        hits &= t.symbols[k : n - m + 1 + k] == p.symbols[k]
    return np.flatnonzero(hits).astype(np.int64)


def find_candidates(prog: MatcherProgram, t: CondensedSequence) -> np.ndarray:
    """Positions where the compiled pattern occurs in t, ascending.

    Equals naive_find on the same inputs: the scan matches the first
    ``effective_len`` symbols, the remainder (if any) is verified here.
    """
    if t.alphabet_size != prog.pattern.alphabet_size:
        raise ValueError("pattern and text use different condensed alphabets")
    n = len(t)
    if n < prog.full_len:
        return np.zeros(0, dtype=np.int64)
    cands = _sbndm2_scan(t.symbols, prog.masks, prog.effective_len)
    if prog.full_len > prog.effective_len:
        cands = cands[cands + prog.full_len <= n]
        ps = prog.pattern.symbols
        for k in range(prog.effective_len, prog.full_len):
            if cands.size == 0:
                break
            cands = cands[t.symbols[cands + k] == ps[k]]
    return cands
