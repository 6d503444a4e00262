"""Measuring filtration efficiency across schemes.

The benchmark extracts patterns from a text, runs every scheme over the
same pattern set, and reports, per scheme and pattern length:

  - mean search time and the speedup relative to the binary filter (fct)
  - false positives normalised per 2^20 text characters
  - gain: the percentage of the binary filter's false positives removed

The gain numbers are the headline result: richer neighbourhood encodings
discard almost all the spurious candidates the one-bit code lets through.
"""

import sys

from oppm import gen_rand_delta
from oppm.bench import BenchConfig, emit, run_bench

# A reduced grid so the demo finishes in seconds; raise n, the lengths and
# patterns_per_length for publication-sized runs.
cfg = BenchConfig(
    text=gen_rand_delta(1 << 18, 20, seed=1),
    pattern_lengths=(8, 12, 16),
    patterns_per_length=25,
    seed=1,
    reps=1,
    verify=True,  # cross-check every occurrence list against the oracle
)

rows = run_bench(cfg, log=sys.stderr)

print(emit(rows, "table"))

# The same rows in machine-readable form, e.g. for plotting.
csv = emit(rows, "csv")
print("csv preview:")
print("\n".join(csv.split("\n")[:4]))

# A few headline figures pulled out of the rows directly.
by = {(r.scheme, r.m): r for r in rows}
print("\nat m=16:")
for scheme in ("nr4", "no3", "no4"):
    r = by[(scheme, 16)]
    print(f"  {scheme}: gain {r.gain_pct:.1f}%  speedup x{r.speedup_vs_fct:.2f}")
