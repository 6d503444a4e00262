import numpy as np
import pytest

from oppm.core import brute_force_isomorphic
from oppm.gen import PERIOD_PROFILE, extract_patterns, gen_period_delta, gen_rand_delta
from oppm.search import brute_force_search


def autocorr(y, lag):
    y = y.astype(np.float64)
    return np.corrcoef(y[:-lag], y[lag:])[0, 1]


class TestRandDelta:
    def test_range(self):
        y = gen_rand_delta(10_000, 20, 1)
        assert y.min() >= 80 and y.max() <= 120

    def test_delta_zero_constant(self):
        assert (gen_rand_delta(100, 0, 1) == 100).all()

    def test_deterministic_per_seed(self):
        a = gen_rand_delta(1000, 5, 7)
        b = gen_rand_delta(1000, 5, 7)
        c = gen_rand_delta(1000, 5, 8)
        assert (a == b).all()
        assert (a != c).any()

    def test_delta_bounds(self):
        with pytest.raises(ValueError):
            gen_rand_delta(10, 101, 0)

    def test_domains_order_isomorphic(self):
        i = gen_rand_delta(500, 20, 3, "i32")
        f = gen_rand_delta(500, 20, 3, "f64")
        assert i.dtype == np.int32 and f.dtype == np.float64
        assert brute_force_isomorphic(i, f)


class TestPeriodDelta:
    def test_profile_shape(self):
        assert PERIOD_PROFILE.size == 10
        assert PERIOD_PROFILE.min() == 0 and PERIOD_PROFILE.max() == 200

    def test_range(self):
        y = gen_period_delta(10_000, 5, 1)
        assert y.min() >= 0 and y.max() <= 205

    def test_delta_zero_exactly_periodic(self):
        y = gen_period_delta(100, 0, 1)
        assert (y[10:] == y[:-10]).all()

    def test_deterministic_per_seed(self):
        assert (gen_period_delta(500, 5, 2) == gen_period_delta(500, 5, 2)).all()

    def test_lag10_autocorrelation_dominates_lag5(self):
        y = gen_period_delta(1 << 16, 5, 11)
        assert autocorr(y, 10) > autocorr(y, 5)


class TestExtractPatterns:
    def test_count_and_length(self):
        y = gen_rand_delta(5000, 20, 1)
        pats = extract_patterns(y, 8, 100, 2)
        assert len(pats) == 100
        assert all(len(p) == 8 for p in pats)

    def test_patterns_occur_in_source(self):
        y = gen_rand_delta(2000, 20, 1)
        for p in extract_patterns(y, 6, 10, 3):
            assert brute_force_search(p, y).size >= 1

    def test_deterministic(self):
        y = gen_rand_delta(1000, 20, 1)
        a = extract_patterns(y, 8, 5, 4)
        b = extract_patterns(y, 8, 5, 4)
        assert all((p == q).all() for p, q in zip(a, b))

    def test_pattern_longer_than_text(self):
        with pytest.raises(ValueError):
            extract_patterns([1, 2, 3], 4, 1, 0)
