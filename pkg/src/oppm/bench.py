"""Benchmark orchestration: run every scheme over extracted patterns and
report time, false-positive and relative-gain statistics.

For each pattern length the binary filter ("fct") is the baseline; other
schemes report their speedup (time(fct) / time) and false-positive gain
(100 * (fp(fct) - fp) / fp(fct)) against it.
"""

from __future__ import annotations

import statistics
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from .core import as_sequence
from .filters import FilterScheme, binary_encode, no_encode, nr_encode
from .gen import extract_patterns
from .search import brute_force_search, fp_per_window, preprocess, search

__all__ = [
    "BenchConfig",
    "BenchRow",
    "VerificationError",
    "default_schemes",
    "run_bench",
    "emit",
    "selftest",
]

CSV_HEADER = "scheme,q,m,time_ms,candidates,occurrences,false_positives,fp_per_2e20,speedup_vs_fct,gain_pct"


class VerificationError(Exception):
    """Raised when a scheme's occurrences disagree with the oracle."""


def default_schemes() -> list[FilterScheme]:
    return (
        [FilterScheme.binary()]
        + [FilterScheme.nr(q) for q in range(2, 7)]
        + [FilterScheme.no(q) for q in range(2, 5)]
    )


@dataclass
class BenchConfig:
    text: np.ndarray
    pattern_lengths: tuple = (8, 12, 16, 20, 24, 28, 32)
    patterns_per_length: int = 100
    schemes: tuple = None
    seed: int = 1
    fp_window: int = 1 << 20
    reps: int = 5
    verify: bool = False

    def __post_init__(self):
        self.text = as_sequence(self.text)
        if self.schemes is None:
            self.schemes = tuple(default_schemes())
        else:
            self.schemes = tuple(self.schemes)
        self.pattern_lengths = tuple(int(m) for m in self.pattern_lengths)


@dataclass
class BenchRow:
    scheme: str
    q: int
    m: int
    time_ms: float | None = None
    candidates: float | None = None
    occurrences: int | None = None
    false_positives: float | None = None
    fp_per_window: float | None = None
    speedup_vs_fct: float | None = None
    gain_pct: float | None = None
    skipped: bool = False


def _bench_one(cfg: BenchConfig, scheme: FilterScheme, patterns, oracle) -> BenchRow:
    m = len(patterns[0])
    times = []
    cands = fps = occ_total = 0
    fp_norm = 0.0
    for idx, x in enumerate(patterns):
        s = preprocess(x, scheme)
        if cfg.reps > 1:
            search(s, cfg.text)  # warm-up, discarded
        rep_times = []
        for _ in range(cfg.reps):
            t0 = time.perf_counter()
            rep = search(s, cfg.text)
            rep_times.append(time.perf_counter() - t0)
        times.append(statistics.median(rep_times))
        cands += rep.candidates
        fps += rep.false_positives
        occ_total += int(rep.occurrences.size)
        fp_norm += fp_per_window(rep, cfg.fp_window)
        if cfg.verify:
            expected = oracle[idx]
            if not np.array_equal(rep.occurrences, expected):
                raise VerificationError(
                    f"{scheme.name} m={m} pattern {idx}: occurrences differ from oracle"
                )
    k = len(patterns)
    return BenchRow(
        scheme=scheme.name,
        q=scheme.shrink,
        m=m,
        time_ms=1000.0 * sum(times) / k,
        candidates=cands / k,
        occurrences=occ_total,
        false_positives=fps / k,
        fp_per_window=fp_norm / k,
    )


def run_bench(cfg: BenchConfig, log=None) -> list[BenchRow]:
    """Run all (pattern length, scheme) combinations and fill in the
    relative columns against the fct baseline of the same length."""
    log = log if log is not None else sys.stderr
    rows: list[BenchRow] = []
    for m in cfg.pattern_lengths:
        patterns = extract_patterns(cfg.text, m, cfg.patterns_per_length, cfg.seed + m)
        oracle = [brute_force_search(x, cfg.text) for x in patterns] if cfg.verify else None
        per_m: list[BenchRow] = []
        for scheme in cfg.schemes:
            if m <= scheme.shrink:
                print(f"warning: skipping {scheme.name} at m={m} (m <= q)", file=log)
                per_m.append(BenchRow(scheme=scheme.name, q=scheme.shrink, m=m, skipped=True))
                continue
            per_m.append(_bench_one(cfg, scheme, patterns, oracle))
        fct = next((r for r in per_m if r.scheme == "fct" and not r.skipped), None)
        counts = {r.occurrences for r in per_m if not r.skipped}
        if len(counts) > 1:
            raise VerificationError(f"occurrence checksum differs across schemes at m={m}: {counts}")
        for r in per_m:
            if r.skipped or fct is None:
                continue
            if fct.time_ms and r.time_ms:
                r.speedup_vs_fct = fct.time_ms / r.time_ms
            if fct.fp_per_window:
                r.gain_pct = 100.0 * (fct.fp_per_window - r.fp_per_window) / fct.fp_per_window
            elif r.scheme == "fct":
                r.gain_pct = 0.0
        rows.extend(per_m)
    return rows


def _fmt(value, spec) -> str:
    return "" if value is None else format(value, spec)


def emit(rows: list[BenchRow], fmt: str = "csv") -> str:
    """Render rows as machine-readable CSV or an aligned two-block table
    (times/speedups above, false positives/gains below)."""
    if fmt == "csv":
        return _emit_csv(rows)
    if fmt == "table":
        return _emit_table(rows)
    raise ValueError(f"unknown output format {fmt!r}")


def _emit_csv(rows) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    r.scheme,
                    str(r.q),
                    str(r.m),
                    _fmt(r.time_ms, ".3f"),
                    _fmt(r.candidates, ".2f"),
                    _fmt(r.occurrences, "d"),
                    _fmt(r.false_positives, ".2f"),
                    _fmt(r.fp_per_window, ".2f"),
                    _fmt(r.speedup_vs_fct, ".3f"),
                    _fmt(r.gain_pct, ".1f"),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _emit_table(rows) -> str:
    lengths = sorted({r.m for r in rows})
    schemes = list(dict.fromkeys(r.scheme for r in rows))
    by_key = {(r.scheme, r.m): r for r in rows}

    def cell(scheme, m, attr, spec):
        r = by_key.get((scheme, m))
        if r is None or r.skipped:
            return "-"
        v = getattr(r, attr)
        return "-" if v is None else format(v, spec)

    width = 12
    header = "m".ljust(6) + "".join(s.rjust(width) for s in schemes)
    out = ["time_ms (fct absolute, others speedup vs fct)", header]
    for m in lengths:
        cells = []
        for s in schemes:
            if s == "fct":
                cells.append(cell(s, m, "time_ms", ".2f"))
            else:
                cells.append(cell(s, m, "speedup_vs_fct", ".2f"))
        out.append(str(m).ljust(6) + "".join(c.rjust(width) for c in cells))
    out += ["", "false positives per window (fct absolute, others gain %)", header]
    for m in lengths:
        cells = []
        for s in schemes:
            if s == "fct":
                cells.append(cell(s, m, "fp_per_window", ".2f"))
            else:
                cells.append(cell(s, m, "gain_pct", ".1f"))
        out.append(str(m).ljust(6) + "".join(c.rjust(width) for c in cells))
    return "\n".join(out) + "\n"


def _all_schemes_small() -> list[FilterScheme]:
    return (
        [FilterScheme.binary()]
        + [FilterScheme.nr(q) for q in range(1, 7)]
        + [FilterScheme.no(q) for q in range(1, 5)]
    )


def selftest(out=None) -> bool:
    """Run the reference examples and a randomized oracle cross-check.

    Prints one PASS/FAIL line per check; returns overall success.
    """
    out = out if out is not None else sys.stdout
    checks = [
        ("rank-table-ties", _check_rank_ties),
        ("rank-table-distinct", _check_rank_distinct),
        ("nr-q4-reference-sequence", _check_nr_reference),
        ("no-q3-reference-sequence", _check_no_reference),
        ("isomorphic-reference-pair", _check_iso_pair),
        ("figure-text-occurrences", _check_figure_text),
        ("randomized-search-oracle", _check_random_oracle),
        ("randomized-matcher-oracle", _check_matcher_oracle),
    ]
    ok = True
    for name, fn in checks:
        try:
            fn()
            print(f"PASS {name}", file=out)
        except AssertionError as exc:
            ok = False
            print(f"FAIL {name}: {exc}", file=out)
    return ok


def _check_rank_ties():
    from .core import rank_table

    rt = rank_table([6, 3, 8, 3, 10, 7, 10])
    assert rt.r.tolist() == [1, 3, 0, 5, 2, 4, 6], rt.r.tolist()
    assert rt.eq.tolist() == [1, 0, 0, 0, 0, 1], rt.eq.tolist()


def _check_rank_distinct():
    from .core import rank_table

    rt = rank_table([6, 5, 8, 4, 7])
    assert rt.r.tolist() == [3, 1, 0, 4, 2], rt.r.tolist()
    assert rt.eq.tolist() == [0, 0, 0, 0], rt.eq.tolist()


def _check_nr_reference():
    got = nr_encode([5, 6, 3, 8, 10, 7, 1, 9, 10, 8], 4).symbols.tolist()
    assert got == [4, 8, 1, 6, 15, 8], got


def _check_no_reference():
    got = no_encode([5, 6, 3, 8, 10, 7, 1, 9, 10, 8], 3).symbols.tolist()
    assert got == [20, 32, 3, 31, 60, 32, 3], got


def _check_iso_pair():
    from .core import brute_force_isomorphic

    assert brute_force_isomorphic([6, 3, 8, 3, 10, 7, 10], [2, 1, 4, 1, 5, 3, 5])


def _check_figure_text():
    x = [6, 5, 8, 4, 7]
    y = [8, 11, 10, 16, 15, 20, 13, 17, 14, 18, 20, 18, 25, 17, 20, 25, 26]
    for scheme in _all_schemes_small():
        if len(x) <= scheme.shrink:
            continue
        got = search(preprocess(x, scheme), y).occurrences.tolist()
        assert got == [3], f"{scheme.name}: {got}"


def _check_random_oracle(trials: int = 200):
    rng = np.random.Generator(np.random.PCG64(7))
    schemes = _all_schemes_small()
    for _ in range(trials):
        m = int(rng.integers(2, 13))
        n = int(rng.integers(m, 200))
        hi = int(rng.choice([3, 50]))
        x = rng.integers(0, hi, size=m)
        y = rng.integers(0, hi, size=n)
        expected = brute_force_search(x, y).tolist()
        for scheme in schemes:
            if m <= scheme.shrink:
                continue
            got = search(preprocess(x, scheme), y).occurrences.tolist()
            assert got == expected, f"{scheme.name} m={m} n={n}: {got} != {expected}"


def _check_matcher_oracle(trials: int = 200):
    from .filters import CondensedSequence
    from .match import compile_pattern, find_candidates, naive_find

    rng = np.random.Generator(np.random.PCG64(11))
    for _ in range(trials):
        sigma = int(rng.choice([2, 16, 64]))
        m = int(rng.integers(2, 90))
        n = int(rng.integers(m, 500))
        p = CondensedSequence(rng.integers(0, sigma, size=m).astype(np.uint16), sigma, 1)
        t = CondensedSequence(rng.integers(0, sigma, size=n).astype(np.uint16), sigma, 1)
        got = find_candidates(compile_pattern(p), t).tolist()
        want = naive_find(p, t).tolist()
        assert got == want, f"sigma={sigma} m={m} n={n}: {got} != {want}"
