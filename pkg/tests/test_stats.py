"""Tests for run summaries and the rank-sum significance test."""

import numpy as np
import pytest
import scipy.stats

from helpers import brute_force_two_sided_p
from smsopt import ConfigurationError, summarize, wilcoxon_rank_sum


class TestSummarize:
    def test_basic(self):
        s = summarize([1.0, 2.0, 3.0, 4.0])
        assert s.ab == 2.5
        assert s.mb == 2.5  # even count averages the middle pair
        assert s.sd == pytest.approx(np.std([1, 2, 3, 4], ddof=1))
        assert s.count == 4

    def test_odd_median(self):
        assert summarize([5.0, 1.0, 3.0]).mb == 3.0

    def test_single_value(self):
        s = summarize([7.0])
        assert (s.ab, s.mb, s.sd, s.count) == (7.0, 7.0, 0.0, 1)

    def test_rejects_empty_and_non_finite(self):
        with pytest.raises(ConfigurationError):
            summarize([])
        with pytest.raises(ConfigurationError):
            summarize([1.0, float("nan")])
        with pytest.raises(ConfigurationError):
            summarize([1.0, float("inf")])


class TestWilcoxonExact:
    def test_textbook_case(self):
        r = wilcoxon_rank_sum([1.0, 2.0, 3.0], [4.0, 5.0, 6.0])
        assert r.p_two_sided == pytest.approx(0.1, abs=1e-15)
        assert r.method == "exact"
        assert r.rank_sum == 6.0
        assert r.direction == -1

    def test_symmetry(self):
        a = [0.3, 1.7, 2.2, 5.0]
        b = [0.9, 3.3, 4.1, 6.6, 7.2]
        ra = wilcoxon_rank_sum(a, b)
        rb = wilcoxon_rank_sum(b, a)
        assert ra.p_two_sided == rb.p_two_sided
        assert ra.direction == -rb.direction

    def test_monotone_transform_invariance(self):
        a = [0.11, 0.52, 0.67]
        b = [0.23, 0.71, 0.94, 0.99]
        base = wilcoxon_rank_sum(a, b).p_two_sided
        scaled = wilcoxon_rank_sum([1e3 * v for v in a], [1e3 * v for v in b])
        assert scaled.p_two_sided == base  # ranks see only the ordering

    def test_perfect_balance_gives_p_one(self):
        r = wilcoxon_rank_sum([1.0, 4.0], [2.0, 3.0])
        assert r.p_two_sided == 1.0
        assert r.direction == 0

    def test_matches_brute_force_on_random_grid(self):
        g = np.random.default_rng(123)
        for n1, n2 in [(2, 2), (2, 5), (3, 3), (3, 6), (4, 4), (4, 7), (5, 6)]:
            for _ in range(5):
                a = g.standard_normal(n1)
                b = g.standard_normal(n2) + g.uniform(-1, 1)
                r = wilcoxon_rank_sum(a, b)
                assert r.method == "exact"
                oracle = brute_force_two_sided_p(list(a), list(b))
                assert abs(r.p_two_sided - oracle) <= 1e-12

    def test_matches_brute_force_with_within_sample_ties(self):
        a = [1.0, 1.0, 2.0]
        b = [3.0, 4.0, 4.0]
        r = wilcoxon_rank_sum(a, b)
        assert r.method == "exact"  # ties within one sample keep the DP exact
        assert abs(r.p_two_sided - brute_force_two_sided_p(a, b)) <= 1e-12


class TestWilcoxonNormal:
    def test_cross_ties_force_approximation(self):
        r = wilcoxon_rank_sum([1.0, 2.0, 3.0], [3.0, 4.0, 5.0])
        assert r.method == "normal-approximation"
        assert 0.0 < r.p_two_sided <= 1.0

    def test_large_samples_use_approximation(self):
        g = np.random.default_rng(5)
        a = g.standard_normal(13)
        b = g.standard_normal(13)
        assert wilcoxon_rank_sum(a, b).method == "normal-approximation"

    def test_agrees_with_reference_asymptotic(self):
        # Same construction as the corrected Mann-Whitney asymptotic:
        # tie-corrected variance plus 0.5 continuity correction.
        g = np.random.default_rng(17)
        for _ in range(10):
            a = g.standard_normal(15)
            b = g.standard_normal(14) + 0.4
            ours = wilcoxon_rank_sum(a, b).p_two_sided
            ref = scipy.stats.mannwhitneyu(
                a, b, alternative="two-sided", method="asymptotic"
            ).pvalue
            assert ours == pytest.approx(ref, abs=1e-10)

    def test_all_tied_degenerates_to_p_one(self):
        r = wilcoxon_rank_sum([2.0] * 15, [2.0] * 15)
        assert r.p_two_sided == 1.0
        assert r.direction == 0

    def test_strong_separation_is_significant(self):
        a = list(range(20))
        b = [v + 100.5 for v in range(20)]
        r = wilcoxon_rank_sum(a, b)
        assert r.p_two_sided < 1e-6
        assert r.direction == -1


class TestWilcoxonValidation:
    def test_rejects_empty(self):
        with pytest.raises(ConfigurationError):
            wilcoxon_rank_sum([], [1.0])
        with pytest.raises(ConfigurationError):
            wilcoxon_rank_sum([1.0], [])

    def test_p_always_in_unit_interval(self):
        g = np.random.default_rng(31)
        for _ in range(50):
            n1 = int(g.integers(1, 20))
            n2 = int(g.integers(1, 20))
            vals = g.integers(0, 6, n1 + n2).astype(float)  # heavy ties
            r = wilcoxon_rank_sum(vals[:n1], vals[n1:])
            assert 0.0 < r.p_two_sided <= 1.0
