"""Order isomorphism from first principles.

Two sequences of the same length are order-isomorphic when every pair of
positions compares the same way in both: x[i] <= x[j] exactly when
y[i] <= y[j].  The shape of the curve matters, the actual values do not.
This script walks through the rank-table representation that makes the
check linear per window.
"""

import numpy as np

from oppm import brute_force_isomorphic, is_isomorphic_at, rank_table

# ---------------------------------------------------------------------------
# A sequence and a value-shifted, value-scaled copy are order-isomorphic.
# ---------------------------------------------------------------------------
x = np.array([6, 3, 8, 3, 10, 7, 10])
y = 5 * x + 17

print("x           =", x.tolist())
print("5x + 17     =", y.tolist())
print("isomorphic? ", brute_force_isomorphic(x, y))

# Any strictly increasing relabelling preserves order; ties must stay ties.
z = np.array([2, 1, 4, 1, 5, 3, 5])
print("relabelled  =", z.tolist(), "->", brute_force_isomorphic(x, z))

# Breaking a tie breaks the isomorphism, even though the ordering of the
# distinct values is untouched.
w = z.copy()
w[3] = 0  # was tied with position 1
print("tie broken  =", w.tolist(), "->", brute_force_isomorphic(x, w))

# ---------------------------------------------------------------------------
# The rank table: r is the stable argsort of the pattern, eq marks adjacent
# sorted positions holding equal values.  Together they let us verify a
# window in O(m) instead of O(m^2) pairwise comparisons.
# ---------------------------------------------------------------------------
rt = rank_table(x)
print()
print("rank order r =", rt.r.tolist())
print("tie bitmap eq=", rt.eq.tolist())

# Reading the table: walking the text window in the order given by r must
# produce a non-decreasing value sequence, with equality exactly where eq
# says there is a tie.
window = y
ordered = window[rt.r]
print("window in rank order:", ordered.tolist())
print("non-decreasing:", bool((np.diff(ordered) >= 0).all()))

# ---------------------------------------------------------------------------
# Sliding the table along a longer text.
# ---------------------------------------------------------------------------
text = np.array([8, 11, 10, 16, 15, 20, 13, 17, 14, 18, 20, 18, 25, 17, 20, 25, 26])
pattern = np.array([6, 5, 8, 4, 7])
rt = rank_table(pattern)

hits = [i for i in range(len(text) - len(pattern) + 1) if is_isomorphic_at(rt, text, i)]
print()
print("pattern", pattern.tolist(), "occurs at", hits)
for i in hits:
    print("  window", i, "=", text[i : i + len(pattern)].tolist())

# Note the near miss at position 10: the window <20, 18, 25, 17, 20> has its
# first and last values tied, but the pattern's first and last values are
# not equal, so the strict definition rejects it.
i = 10
print("window 10 =", text[i : i + 5].tolist(), "->", is_isomorphic_at(rt, text, i))
