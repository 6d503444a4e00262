"""Condensing sequences for filtration.

Exact order-isomorphism is expensive to test at every text position, so we
first map both pattern and text into a small condensed alphabet that is
*sound*: order-isomorphic windows always condense identically, only the
converse can fail.  Three encodings of increasing selectivity are shown:

  binary : one bit per adjacent pair, beta[i] = 1 iff s[i] >= s[i+1]
  nr(q)  : neighbourhood ranking, q bits comparing s[i] with the next q
  no(q)  : neighbourhood ordering, all pairwise bits inside each window
"""

import numpy as np

from oppm import FilterScheme, encode, no_encode, nr_encode

x = np.array([5, 6, 3, 8, 10, 7, 1, 9, 10, 8])
print("x =", x.tolist())

# ---------------------------------------------------------------------------
# Binary: alphabet of size 2, one symbol per adjacent pair.
# ---------------------------------------------------------------------------
b = encode(x, FilterScheme.binary())
print("\nbinary bits :", b.symbols.tolist())

# ---------------------------------------------------------------------------
# Neighbourhood ranking with q = 4: each symbol packs the four comparisons
# of x[i] against x[i+1..i+4], most significant bit first, so the alphabet
# grows to 2^4 and the condensed sequence shrinks by q.
# ---------------------------------------------------------------------------
nr4 = nr_encode(x, 4)
print("\nnr, q=4     :", nr4.symbols.tolist())
print("alphabet    :", nr4.alphabet_size, " length:", len(nr4))

# Decode the first symbol by hand to see the layout.
sym = int(nr4.symbols[0])
bits = [(sym >> (4 - k)) & 1 for k in range(1, 5)]
checks = [int(x[0] >= x[k]) for k in range(1, 5)]
print("symbol 0    :", sym, "bits", bits, "== direct comparisons", checks)

# ---------------------------------------------------------------------------
# Neighbourhood ordering with q = 3: every pair inside the (q+1)-window is
# compared, not just pairs anchored at the left end.  The alphabet is
# 2^(q(q+1)/2), and the q leading bits coincide with nr(q).
# ---------------------------------------------------------------------------
no3 = no_encode(x, 3)
print("\nno, q=3     :", no3.symbols.tolist())
print("alphabet    :", no3.alphabet_size)

nr3 = nr_encode(x, 3)
print("no >> 3     :", (no3.symbols >> 3).tolist(), " (anchored-pair bits)")
print("nr, q=3     :", nr3.symbols.tolist())

# ---------------------------------------------------------------------------
# Why the richer encodings filter better: two windows that the binary code
# cannot tell apart get distinct nr/no symbols.
# ---------------------------------------------------------------------------
u = np.array([1, 5, 4, 3, 2])
v = np.array([2, 5, 4, 3, 1])
for name, scheme in [("binary", FilterScheme.binary()), ("nr4", FilterScheme.nr(4)), ("no4", FilterScheme.no(4))]:
    cu = encode(u, scheme).symbols.tolist()
    cv = encode(v, scheme).symbols.tolist()
    verdict = "indistinguishable" if cu == cv else "separated"
    print(f"{name:6s} {cu} vs {cv} -> {verdict}")

# ---------------------------------------------------------------------------
# Soundness in action: an order-isomorphic pair condenses identically
# under every scheme.
# ---------------------------------------------------------------------------
y = 3 * x + 100
print("\ny = 3x + 100 condensations all equal:")
for scheme in [FilterScheme.binary(), FilterScheme.nr(4), FilterScheme.no(3)]:
    same = encode(x, scheme).symbols.tolist() == encode(y, scheme).symbols.tolist()
    print(f"  {scheme.name:6s} {same}")
