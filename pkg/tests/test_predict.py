"""Global count predictions: closed-form table, census route, and exact counts."""
from __future__ import annotations

import math
import random

import pytest

from rayzeros import (
    analyze_ray,
    count_at,
    predict_at,
    predict_census,
    predict_table,
    thresholds,
    validate,
)

from conftest import valid_k_choices, valid_pairs


class TestPredictTable:
    def test_even_k_growth(self):
        pred = predict_table(validate(5, 4, 1.0))
        assert (pred.min_count, pred.max_count, pred.direction) == (5, 11, "increasing")

    def test_negative_k_decay(self):
        pred = predict_table(validate(5, -4, 1.0))
        assert (pred.min_count, pred.max_count, pred.direction) == (5, 11, "decreasing")

    def test_multiple_of_four(self):
        pred = predict_table(validate(4, 1, 1.0))
        assert (pred.min_count, pred.max_count) == (4, 8)

    def test_band_width_always_even(self):
        for m, k in valid_pairs(30):
            pred = predict_table(validate(m, k, 1.0))
            assert pred.max_count >= pred.min_count
            assert (pred.max_count - pred.min_count) % 2 == 0


class TestPredictCensus:
    def test_even_k_growth(self):
        pred = predict_census(validate(5, 4, 1.0))
        assert (pred.min_count, pred.max_count) == (5, 11)

    def test_odd_k(self):
        pred = predict_census(validate(7, 1, 1.0))
        assert (pred.min_count, pred.max_count) == (7, 15)

    def test_negative_k(self):
        pred = predict_census(validate(5, -4, 1.0))
        assert (pred.min_count, pred.max_count) == (5, 11)

    def test_positive_k_minimum_is_m(self):
        for m, k in valid_pairs(30):
            if k > 0:
                assert predict_census(validate(m, k, 1.0)).min_count == m


class TestEquivalence:
    def test_table_equals_census_medium_range(self):
        # the full m <= 200 sweep runs in the acceptance suite
        for m, k in valid_pairs(60):
            p = validate(m, k, 1.0)
            assert predict_table(p) == predict_census(p), (m, k)


class TestPredictAt:
    def test_example_counts(self):
        p = validate(5, 4, 1.0)
        assert [predict_at(p, c) for c in (0.1, 1.0, 3.0)] == [5, 7, 11]
        q = validate(5, -4, 1.0)
        assert [predict_at(q, c) for c in (0.1, 0.2, 1.0)] == [11, 9, 5]

    def test_below_all_thresholds_attains_min(self):
        for m, k in valid_pairs(12):
            p = validate(m, k, 1.0)
            pred = predict_table(p)
            ths = thresholds(p)
            lo_c = min((th.c0 for th in ths), default=1.0) / 4.0
            hi_c = max((th.c0 for th in ths), default=1.0) * 4.0
            lo_count = pred.min_count if k > 0 else pred.max_count
            hi_count = pred.max_count if k > 0 else pred.min_count
            assert predict_at(p, lo_c) == lo_count
            assert predict_at(p, hi_c) == hi_count

    def test_sandwich(self):
        rng = random.Random(777)
        for _ in range(50):
            m = rng.randint(2, 13)
            k = rng.choice(valid_k_choices(m))
            c = 10.0 ** rng.uniform(-4, 4)
            p = validate(m, k, c)
            pred = predict_table(p)
            assert pred.min_count <= predict_at(p, c) <= pred.max_count

    def test_equals_sum_of_ray_counts(self):
        for m, k in ((5, 4), (5, -4), (7, 3), (8, -5), (2, 1)):
            p = validate(m, k, 1.0)
            for c in (0.01, 0.4, 1.1, 2.9, 40.0):
                direct = sum(count_at(analyze_ray(p, j), c) for j in range(2 * m))
                assert predict_at(p, c) == direct

    def test_steps_only_at_thresholds(self):
        p = validate(5, -4, 1.0)
        ths = [th.c0 for th in thresholds(p)]
        grid = sorted(
            [c for c in (0.05, 0.1, 0.3, 0.6, 1.0, 5.0)]
            + [c0 * (1 - 1e-6) for c0 in ths]
            + [c0 * (1 + 1e-6) for c0 in ths]
        )
        prev_c, prev_n = grid[0], predict_at(p, grid[0])
        for c in grid[1:]:
            n = predict_at(p, c)
            if n != prev_n:
                assert any(prev_c < c0 <= c for c0 in ths), (prev_c, c)
            prev_c, prev_n = c, n

    def test_monotone_step_function(self):
        rng = random.Random(1234)
        for _ in range(25):
            m = rng.randint(2, 13)
            k = rng.choice(valid_k_choices(m))
            p = validate(m, k, 1.0)
            counts = [
                predict_at(p, math.exp(x))
                for x in [math.log(1e-3) + i * (math.log(1e3) - math.log(1e-3)) / 99 for i in range(100)]
            ]
            if k > 0:
                assert counts == sorted(counts)
            else:
                assert counts == sorted(counts, reverse=True)

    def test_rejects_nonpositive_c(self):
        with pytest.raises(ValueError):
            predict_at(validate(3, 1, 1.0), 0.0)
