"""Order-preserving pattern matching with condensed-alphabet filtration.

Find every text window whose relative order equals a numeric pattern's.
The text is condensed onto a small alphabet (binary, neighbourhood
ranking, or neighbourhood ordering), scanned with a bit-parallel exact
matcher, and each candidate window is verified against the pattern's rank
table.
"""

from .core import (
    RankTable,
    as_sequence,
    brute_force_isomorphic,
    is_isomorphic_at,
    rank_table,
)
from .filters import (
    CondensedSequence,
    FilterScheme,
    StreamEncoder,
    beta,
    binary_encode,
    encode,
    no_encode,
    no_value,
    nr_encode,
    nr_value,
)
from .gen import extract_patterns, gen_period_delta, gen_rand_delta
from .match import MatcherProgram, compile_pattern, find_candidates, naive_find
from .search import (
    SearchReport,
    Searcher,
    brute_force_search,
    fp_per_window,
    preprocess,
    search,
)
from .seqio import read_sequence, write_sequence

__version__ = "0.1.0"

__all__ = [
    "RankTable",
    "as_sequence",
    "brute_force_isomorphic",
    "is_isomorphic_at",
    "rank_table",
    "CondensedSequence",
    "FilterScheme",
    "StreamEncoder",
    "beta",
    "binary_encode",
    "encode",
    "no_encode",
    "no_value",
    "nr_encode",
    "nr_value",
    "extract_patterns",
    "gen_period_delta",
    "gen_rand_delta",
    "MatcherProgram",
    "compile_pattern",
    "find_candidates",
    "naive_find",
    "SearchReport",
    "Searcher",
    "brute_force_search",
    "fp_per_window",
    "preprocess",
    "search",
    "read_sequence",
    "write_sequence",
]
