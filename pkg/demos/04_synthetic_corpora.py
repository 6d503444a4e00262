"""Synthetic corpora for controlled experiments.

Two generator families, both fully determined by a seed:

  rand-delta   : i.i.d. uniform integers on [100 - delta, 100 + delta];
                 delta controls the tie density through the alphabet size.
  period-delta : a fixed period-10 profile plus uniform noise of amplitude
                 delta; small delta gives a strongly self-similar text that
                 stresses filtration far harder than random data.
"""

import numpy as np

from oppm import (
    FilterScheme,
    extract_patterns,
    gen_period_delta,
    gen_rand_delta,
    preprocess,
    search,
)

# ---------------------------------------------------------------------------
# rand-delta: the alphabet has 2*delta + 1 values.  Tiny delta means many
# ties and a text where even exact equality of windows is common.
# ---------------------------------------------------------------------------
for delta in (1, 5, 20):
    y = gen_rand_delta(50_000, delta, seed=1)
    distinct = np.unique(y).size
    print(f"rand-{delta:<3d} range [{y.min()}, {y.max()}], {distinct} distinct values")

# Determinism: the same seed always reproduces the same text.
a = gen_rand_delta(1000, 20, seed=7)
b = gen_rand_delta(1000, 20, seed=7)
print("seed 7 reproducible:", bool((a == b).all()))

# ---------------------------------------------------------------------------
# period-delta: noise rides on a repeating profile, so windows one period
# apart look nearly identical in shape.
# ---------------------------------------------------------------------------
y = gen_period_delta(1 << 16, 5, seed=11)
print("\nperiod-5 first two periods:", y[:20].tolist())


def autocorr(v, lag):
    v = v.astype(np.float64)
    return float(np.corrcoef(v[:-lag], v[lag:])[0, 1])


print("autocorrelation lag  5:", round(autocorr(y, 5), 3))
print("autocorrelation lag 10:", round(autocorr(y, 10), 3), " (the period)")
print("autocorrelation lag 20:", round(autocorr(y, 20), 3))

# ---------------------------------------------------------------------------
# Why periodic texts are the hard case: patterns cut from the text recur in
# shape every period, so the filters face many near-occurrences.  Compare
# false-positive counts for the same scheme on both corpora.
# ---------------------------------------------------------------------------
print("\nfalse positives for 10 extracted patterns, m=8, scheme no3:")
for name, text in [("rand-20", gen_rand_delta(1 << 16, 20, 3)),
                   ("period-5", gen_period_delta(1 << 16, 5, 3))]:
    fps = occ = 0
    for x in extract_patterns(text, 8, 10, seed=5):
        rep = search(preprocess(x, FilterScheme.no(3)), text)
        fps += rep.false_positives
        occ += rep.occurrences.size
    print(f"  {name:9s} occurrences={occ:6d}  false positives={fps}")
