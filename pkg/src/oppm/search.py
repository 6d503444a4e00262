"""End-to-end order-preserving search.

Pipeline: condense the pattern under a filter scheme, scan the condensed
text for exact candidates, verify each candidate window against the
pattern's rank table.  The candidate scan can only over-report (the
transforms preserve isomorphism), and verification removes every false
positive, so the result always equals the brute-force answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .core import RankTable, as_sequence, rank_table, verify_positions
from .filters import CondensedSequence, FilterScheme, encode
from .match import MatcherProgram, compile_pattern, find_candidates, naive_find

__all__ = ["Searcher", "SearchReport", "preprocess", "search", "brute_force_search", "fp_per_window"]


@dataclass(eq=False)
class Searcher:
    """Immutable preprocessed pattern state; safe to share across scans."""

    scheme: FilterScheme
    rank: RankTable
    condensed: CondensedSequence
    program: MatcherProgram | None
    m: int


@dataclass(eq=False)
class SearchReport:
    """Occurrences plus filtration accuracy and timing statistics."""

    occurrences: np.ndarray = field(repr=False)
    candidates: int = 0
    false_positives: int = 0
    text_len: int = 0
    filter_time: float = 0.0
    verify_time: float = 0.0


def preprocess(x, scheme: FilterScheme) -> Searcher:
    """Build rank table, condensed pattern and matcher for a pattern.

    The bit-parallel engine needs at least two condensed symbols; shorter
    condensed patterns fall back to the naive matcher.
    """
    x = as_sequence(x)
    if x.size < 2:
        raise ValueError("pattern too short")
    if x.size <= scheme.shrink:
        raise ValueError(f"pattern of length {x.size} too short for scheme {scheme.name}")
    rt = rank_table(x)
    cp = encode(x, scheme)
    program = compile_pattern(cp) if len(cp) >= 2 else None
    return Searcher(scheme=scheme, rank=rt, condensed=cp, program=program, m=int(x.size))


def search(s: Searcher, y, condensed_text: CondensedSequence | None = None) -> SearchReport:
    """Find all order-preserving occurrences of the preprocessed pattern.

    ``condensed_text`` may carry a pre-encoded text (the encoding depends
    only on the scheme, so it can be shared across patterns); otherwise the
    text is encoded here and the cost is charged to filter_time.
    """
    y = as_sequence(y)
    n = int(y.size)
    if n < s.m:
        return SearchReport(np.zeros(0, dtype=np.int64), 0, 0, n)
    t0 = time.perf_counter()
    if condensed_text is None:
        condensed_text = encode(y, s.scheme)
    if s.program is not None:
        cands = find_candidates(s.program, condensed_text)
    else:
        cands = naive_find(s.condensed, condensed_text)
    t1 = time.perf_counter()
    occ = cands[verify_positions(s.rank, y, cands)]
    t2 = time.perf_counter()
    return SearchReport(
        occurrences=occ,
        candidates=int(cands.size),
        false_positives=int(cands.size - occ.size),
        text_len=n,
        filter_time=t1 - t0,
        verify_time=t2 - t1,
    )


def brute_force_search(x, y, _chunk: int = 2048) -> np.ndarray:
    """Correctness oracle: test the pairwise-comparison biconditional at
    every window.  Chunked so large texts stay within memory."""
    x = as_sequence(x)
    y = as_sequence(y)
    m, n = int(x.size), int(y.size)
    if m == 0:
        raise ValueError("empty pattern")
    if n < m:
        return np.zeros(0, dtype=np.int64)
    lx = x[:, None] <= x[None, :]
    windows = sliding_window_view(y, m)
    hits = np.empty(windows.shape[0], dtype=bool)
    for lo in range(0, windows.shape[0], _chunk):
        w = windows[lo : lo + _chunk]
        ly = w[:, :, None] <= w[:, None, :]
        hits[lo : lo + w.shape[0]] = (ly == lx[None, :, :]).all(axis=(1, 2))
    return np.flatnonzero(hits).astype(np.int64)


def fp_per_window(rep: SearchReport, window: int = 1 << 20) -> float:
    """False positives normalised to a fixed number of text characters."""
    if rep.text_len <= 0:
        raise ValueError("report has no text")
    return rep.false_positives * window / rep.text_len
