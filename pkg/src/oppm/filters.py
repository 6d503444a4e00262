"""Filter transforms that condense a numeric sequence onto a small alphabet.

Three schemes are provided:

* ``binary``  -- one bit per adjacent pair: 1 where s[i] >= s[i+1]
* ``nr(q)``   -- per position, the q bits comparing x[i] against its next
  q neighbours, packed most-significant-first (alphabet 2**q)
* ``no(q)``   -- per position, the q(q+1)/2 bits fully describing the
  relative order of the q+1 elements starting there (concatenated nr
  blocks of shrinking width; alphabet 2**(q(q+1)/2))

All three preserve order isomorphism: isomorphic inputs encode to the same
condensed sequence, so exact matching on the condensed text never loses a
true occurrence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .core import as_sequence

__all__ = [
    "FilterScheme",
    "CondensedSequence",
    "StreamEncoder",
    "beta",
    "binary_encode",
    "nr_value",
    "nr_encode",
    "no_value",
    "no_encode",
    "encode",
]

_NR_MAX_Q = 8  # symbols fit one byte
_NO_MAX_Q = 5  # symbols fit 16 bits: q(q+1)/2 <= 15


@dataclass(frozen=True)
class FilterScheme:
    """Selector for one of the filtration schemes (binary, nr, no)."""

    kind: str
    q: int = 1

    def __post_init__(self):
        if self.kind not in ("binary", "nr", "no"):
            raise ValueError(f"unknown filter kind {self.kind!r}")
        if self.kind == "nr" and not 1 <= self.q <= _NR_MAX_Q:
            raise ValueError(f"nr requires 1 <= q <= {_NR_MAX_Q}, got {self.q}")
        if self.kind == "no" and not 1 <= self.q <= _NO_MAX_Q:
            raise ValueError(f"no requires 1 <= q <= {_NO_MAX_Q}, got {self.q}")

    @classmethod
    def binary(cls) -> "FilterScheme":
        return cls("binary")

    @classmethod
    def nr(cls, q: int) -> "FilterScheme":
        return cls("nr", q)

    @classmethod
    def no(cls, q: int) -> "FilterScheme":
        return cls("no", q)

    @classmethod
    def from_name(cls, name: str) -> "FilterScheme":
        """Parse names like 'fct', 'nr3', 'no4'."""
        name = name.strip().lower()
        if name in ("fct", "binary"):
            return cls.binary()
        for kind in ("nr", "no"):
            if name.startswith(kind) and name[len(kind):].isdigit():
                return cls(kind, int(name[len(kind):]))
        raise ValueError(f"unknown scheme name {name!r}")

    @property
    def name(self) -> str:
        if self.kind == "binary":
            return "fct"
        return f"{self.kind}{self.q}"

    @property
    def shrink(self) -> int:
        """Trailing source positions consumed by the transform."""
        return 1 if self.kind == "binary" else self.q

    @property
    def alphabet_size(self) -> int:
        if self.kind == "binary":
            return 2
        if self.kind == "nr":
            return 1 << self.q
        return 1 << (self.q * (self.q + 1) // 2)


@dataclass(eq=False)
class CondensedSequence:
    """A filter-transformed sequence over a small integer alphabet."""

    symbols: np.ndarray = field(repr=False)
    alphabet_size: int = 2
    shrink: int = 1

    def __len__(self) -> int:
        return int(self.symbols.size)


def beta(x, i: int, j: int) -> int:
    """The greater-or-equal bit between two positions: 1 iff x[i] >= x[j]."""
    x = as_sequence(x)
    n = x.size
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"beta indices ({i}, {j}) out of range for length {n}")
    return int(x[i] >= x[j])


def binary_encode(s) -> CondensedSequence:
    """Condense onto {0, 1}: symbol i is 1 iff s[i] >= s[i+1]."""
    s = as_sequence(s)
    if s.size < 2:
        raise ValueError("sequence too short for scheme")
    sym = (s[:-1] >= s[1:]).astype(np.uint16)
    return CondensedSequence(sym, alphabet_size=2, shrink=1)


def nr_value(x, i: int, q: int) -> int:
    """Pack beta(x, i, i+1) .. beta(x, i, i+q) into one q-bit symbol,
    most significant bit first."""
    x = as_sequence(x)
    if i < 0 or i + q >= x.size:
        raise IndexError(f"position {i} has no {q}-neighbourhood in length {x.size}")
    v = 0
    for j in range(1, q + 1):
        v = (v << 1) | int(x[i] >= x[i + j])
    return v


def nr_encode(x, q: int) -> CondensedSequence:
    """Neighbourhood-ranking transform: |x| - q symbols over 2**q values."""
    if q < 1 or q > _NR_MAX_Q:
        raise ValueError(f"nr requires 1 <= q <= {_NR_MAX_Q}, got {q}")
    x = as_sequence(x)
    n = x.size
    if n <= q:
        raise ValueError("pattern shorter than q+1")
    out = np.zeros(n - q, dtype=np.uint16)
    head = x[: n - q]
    for j in range(1, q + 1):
        out = (out << 1) | (head >= x[j : n - q + j]).astype(np.uint16)
    return CondensedSequence(out, alphabet_size=1 << q, shrink=q)


def no_value(x, i: int, q: int) -> int:
    """Full-order symbol of the q-neighbourhood at position i.

    Concatenates, most significant block first, the nr blocks of width
    q, q-1, ..., 1 taken at positions i, i+1, ..., i+q-1.
    """
    x = as_sequence(x)
    if i < 0 or i + q >= x.size:
        raise IndexError(f"position {i} has no {q}-neighbourhood in length {x.size}")
    v = 0
    for k in range(q, 0, -1):
        base = i + q - k
        for j in range(1, k + 1):
            v = (v << 1) | int(x[base] >= x[base + j])
    return v


def no_encode(x, q: int) -> CondensedSequence:
    """Neighbourhood-ordering transform: |x| - q symbols over
    2**(q(q+1)/2) values."""
    if q < 1 or q > _NO_MAX_Q:
        raise ValueError(f"no requires 1 <= q <= {_NO_MAX_Q}, got {q}")
    x = as_sequence(x)
    n = x.size
    if n <= q:
        raise ValueError("pattern shorter than q+1")
    length = n - q
    out = np.zeros(length, dtype=np.uint16)
    for k in range(q, 0, -1):
        chi = nr_encode(x, k).symbols  # length n - k
        out |= chi[q - k : q - k + length] << np.uint16(k * (k - 1) // 2)
    return CondensedSequence(out, alphabet_size=1 << (q * (q + 1) // 2), shrink=q)


def encode(s, scheme: FilterScheme) -> CondensedSequence:
    """Apply ``scheme`` to a full sequence."""
    if scheme.kind == "binary":
        return binary_encode(s)
    if scheme.kind == "nr":
        return nr_encode(s, scheme.q)
    return no_encode(s, scheme.q)


class StreamEncoder:
    """Online form of ``encode``: feed elements one at a time.

    After the warm-up of ``scheme.shrink`` elements, every push emits
    exactly the symbol the batch encoder would produce at that position.
    Single-owner mutable state; not meant to be shared between threads.
    """

    def __init__(self, scheme: FilterScheme):
        self.scheme = scheme
        self._window = deque(maxlen=scheme.shrink + 1)

    def push(self, element):
        """Consume one element; return the next symbol, or None during
        warm-up."""
        self._window.append(element)
        if len(self._window) < self._window.maxlen:
            return None
        w = np.array(self._window)
        if self.scheme.kind == "binary":
            return int(w[0] >= w[1])
        if self.scheme.kind == "nr":
            return nr_value(w, 0, self.scheme.q)
        return no_value(w, 0, self.scheme.q)

    def feed(self, elements):
        """Push many elements; yield each emitted symbol."""
        for e in elements:
            sym = self.push(e)
            if sym is not None:
                yield sym
