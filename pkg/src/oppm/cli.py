"""Command-line interface.

Subcommands: ``gen`` (write a synthetic corpus), ``search`` (find the
order-preserving occurrences of one pattern), ``bench`` (run the full
scheme/length grid and emit CSV or a table), ``selftest``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bench as bench_mod
from .filters import FilterScheme
from .gen import extract_patterns, gen_period_delta, gen_rand_delta
from .search import brute_force_search, fp_per_window, preprocess, search
from .seqio import read_sequence, write_sequence


def _add_text_source(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--text", metavar="FILE", help="read the text from a sequence file")
    src.add_argument("--rand-delta", type=int, metavar="D", help="generate a rand-delta text")
    src.add_argument("--period-delta", type=int, metavar="D", help="generate a period-delta text")
    p.add_argument("--n", type=int, default=1 << 20, help="generated text length (default 2^20)")
    p.add_argument("--seed", type=int, default=1, help="seed for all generated data")
    p.add_argument("--domain", choices=("i32", "i64", "f64"), default="i32")


def _load_text(args) -> np.ndarray:
    if args.text is not None:
        return read_sequence(args.text)
    if args.rand_delta is not None:
        return gen_rand_delta(args.n, args.rand_delta, args.seed, args.domain)
    return gen_period_delta(args.n, args.period_delta, args.seed, args.domain)


def _scheme_from_args(args) -> FilterScheme:
    if args.scheme == "fct":
        return FilterScheme.binary()
    if args.q is None:
        raise SystemExit(f"error: --q is required for scheme {args.scheme!r}")
    return FilterScheme(args.scheme, args.q)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oppm", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a synthetic text")
    _add_text_source(g)
    g.add_argument("--out", required=True, metavar="FILE")
    g.add_argument("--mode", choices=("text", "binary"), default="binary", help="file format")

    s = sub.add_parser("search", help="search one pattern in a text")
    _add_text_source(s)
    s.add_argument("--pattern", metavar="FILE", help="pattern sequence file")
    s.add_argument("--pattern-len", type=int, metavar="M", help="extract a pattern of this length")
    s.add_argument("--scheme", choices=("fct", "nr", "no"), default="fct")
    s.add_argument("--q", type=int, help="neighbourhood size for nr/no")
    s.add_argument("--fp-window", type=int, default=1 << 20)
    s.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")

    b = sub.add_parser("bench", help="run the benchmark grid")
    _add_text_source(b)
    b.add_argument("--pattern-len", type=int, action="append", metavar="M",
                   help="pattern length; repeatable (default 8,12,...,32)")
    b.add_argument("--pattern-count", type=int, default=100)
    b.add_argument("--scheme", choices=("fct", "nr", "no"), help="restrict to one scheme family")
    b.add_argument("--q", type=int, help="neighbourhood size when --scheme is nr/no")
    b.add_argument("--format", choices=("csv", "table"), default="csv")
    b.add_argument("--fp-window", type=int, default=1 << 20)
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--verify", action="store_true")

    sub.add_parser("selftest", help="run the built-in verification suite")
    return ap


def _cmd_gen(args) -> int:
    write_sequence(args.out, _load_text(args), mode=args.mode)
    return 0


def _cmd_search(args) -> int:
    text = _load_text(args)
    if (args.pattern is None) == (args.pattern_len is None):
        raise SystemExit("error: give exactly one of --pattern / --pattern-len")
    if args.pattern is not None:
        pattern = read_sequence(args.pattern)
    else:
        pattern = extract_patterns(text, args.pattern_len, 1, args.seed + 1)[0]
    rep = search(preprocess(pattern, _scheme_from_args(args)), text)
    print(f"occurrences: {rep.occurrences.tolist()}")
    print(f"candidates: {rep.candidates}  false_positives: {rep.false_positives}")
    print(f"fp_per_window: {fp_per_window(rep, args.fp_window):.2f}")
    print(f"filter_time_ms: {rep.filter_time * 1e3:.3f}  verify_time_ms: {rep.verify_time * 1e3:.3f}")
    if args.verify:
        expected = brute_force_search(pattern, text)
        if not np.array_equal(rep.occurrences, expected):
            print("verification FAILED: occurrences differ from oracle", file=sys.stderr)
            return 1
        print("verification passed")
    return 0


def _cmd_bench(args) -> int:
    schemes = None
    if args.scheme is not None:
        wanted = _scheme_from_args(args)
        schemes = [wanted] if wanted.kind == "binary" else [FilterScheme.binary(), wanted]
    cfg = bench_mod.BenchConfig(
        text=_load_text(args),
        pattern_lengths=tuple(args.pattern_len) if args.pattern_len else (8, 12, 16, 20, 24, 28, 32),
        patterns_per_length=args.pattern_count,
        schemes=schemes,
        seed=args.seed,
        fp_window=args.fp_window,
        reps=args.reps,
        verify=args.verify,
    )
    try:
        rows = bench_mod.run_bench(cfg)
    except bench_mod.VerificationError as exc:
        print(f"verification FAILED: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(bench_mod.emit(rows, args.format))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "search":
            return _cmd_search(args)
        if args.command == "bench":
            return _cmd_bench(args)
        return 0 if bench_mod.selftest() else 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
