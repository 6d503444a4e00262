import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oppm.core import (
    as_sequence,
    brute_force_isomorphic,
    is_isomorphic_at,
    rank_table,
    verify_positions,
)

FIG_TEXT = [8, 11, 10, 16, 15, 20, 13, 17, 14, 18, 20, 18, 25, 17, 20, 25, 26]


class TestAsSequence:
    def test_int_defaults_to_i64(self):
        assert as_sequence([1, 2, 3]).dtype == np.int64

    def test_preserves_i32(self):
        arr = np.array([1, 2], dtype=np.int32)
        assert as_sequence(arr).dtype == np.int32

    def test_rejects_nan(self):
        with pytest.raises(ValueError, match="NaN"):
            as_sequence([1.0, float("nan")])

    def test_rejects_2d(self):
        with pytest.raises(ValueError):
            as_sequence([[1, 2], [3, 4]])


class TestRankTable:
    def test_ties_example(self):
        rt = rank_table([6, 3, 8, 3, 10, 7, 10])
        assert rt.r.tolist() == [1, 3, 0, 5, 2, 4, 6]
        assert rt.eq.tolist() == [1, 0, 0, 0, 0, 1]

    def test_distinct_example(self):
        rt = rank_table([6, 5, 8, 4, 7])
        assert rt.r.tolist() == [3, 1, 0, 4, 2]
        assert rt.eq.tolist() == [0, 0, 0, 0]

    def test_sorted_distinct(self):
        rt = rank_table([1, 2, 3])
        assert rt.r.tolist() == [0, 1, 2]
        assert rt.eq.tolist() == [0, 0]

    def test_tie_broken_by_index(self):
        rt = rank_table([7, 7])
        assert rt.r.tolist() == [0, 1]
        assert rt.eq.tolist() == [1]

    def test_empty_pattern_rejected(self):
        with pytest.raises(ValueError, match="empty pattern"):
            rank_table([])

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=20))
    def test_r_is_stable_sorting_permutation(self, xs):
        rt = rank_table(xs)
        x = np.asarray(xs)
        assert sorted(rt.r.tolist()) == list(range(len(xs)))
        s = x[rt.r]
        assert (s[:-1] <= s[1:]).all()
        # stable: among equal values, source order is kept
        for v in set(xs):
            idx = [i for i in rt.r.tolist() if xs[i] == v]
            assert idx == sorted(idx)

    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=15))
    def test_monotone_map_invariance(self, xs):
        rt1 = rank_table(xs)
        rt2 = rank_table([3 * v + 7 for v in xs])
        assert rt1.r.tolist() == rt2.r.tolist()
        assert rt1.eq.tolist() == rt2.eq.tolist()


class TestIsIsomorphicAt:
    def test_tie_rich_example(self):
        rt = rank_table([6, 3, 8, 3, 10, 7, 10])
        assert is_isomorphic_at(rt, [2, 1, 4, 1, 5, 3, 5], 0)

    def test_figure_text_position_3(self):
        assert is_isomorphic_at(rank_table([6, 5, 8, 4, 7]), FIG_TEXT, 3)

    def test_figure_text_position_0(self):
        assert not is_isomorphic_at(rank_table([6, 5, 8, 4, 7]), FIG_TEXT, 0)

    def test_reflexive(self):
        x = [9, 2, 5, 5, 1]
        assert is_isomorphic_at(rank_table(x), x, 0)

    def test_window_out_of_range(self):
        rt = rank_table([1, 2, 3])
        with pytest.raises(IndexError, match="window exceeds text"):
            is_isomorphic_at(rt, [1, 2], 0)
        with pytest.raises(IndexError):
            is_isomorphic_at(rt, [1, 2, 3, 4], 2)

    def test_length_one_pattern_matches_everywhere(self):
        rt = rank_table([42])
        assert all(is_isomorphic_at(rt, [5, 1, 9], i) for i in range(3))

    @given(
        st.integers(1, 12),
        st.integers(0, 2000),
        st.sampled_from([3, 100]),
    )
    @settings(max_examples=300)
    def test_agrees_with_pairwise_oracle(self, m, seed, sigma):
        rng = np.random.Generator(np.random.PCG64(seed))
        x = rng.integers(0, sigma, size=m)
        n = int(rng.integers(m, m + 20))
        y = rng.integers(0, sigma, size=n)
        rt = rank_table(x)
        for i in range(n - m + 1):
            assert is_isomorphic_at(rt, y, i) == brute_force_isomorphic(x, y[i : i + m])

    def test_verify_positions_matches_scalar(self):
        rng = np.random.Generator(np.random.PCG64(5))
        x = rng.integers(0, 4, size=6)
        y = rng.integers(0, 4, size=200)
        rt = rank_table(x)
        pos = np.arange(200 - 6 + 1)
        vec = verify_positions(rt, y, pos)
        assert vec.tolist() == [is_isomorphic_at(rt, y, i) for i in pos]


class TestBruteForceIsomorphic:
    def test_reference_pair(self):
        assert brute_force_isomorphic([6, 3, 8, 3, 10, 7, 10], [2, 1, 4, 1, 5, 3, 5])

    def test_reversed(self):
        assert not brute_force_isomorphic([1, 2], [2, 1])

    def test_tie_vs_strict(self):
        assert not brute_force_isomorphic([1, 1], [1, 2])

    def test_length_mismatch_false(self):
        assert not brute_force_isomorphic([1, 2], [1, 2, 3])

    def test_floats_exact_equality(self):
        assert brute_force_isomorphic([1.5, 1.5], [2.0, 2.0])
        assert not brute_force_isomorphic([1.5, 1.5 + 1e-12], [2.0, 2.0])
