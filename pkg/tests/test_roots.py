"""Bracket construction, refinement, and the located zero records."""
from __future__ import annotations

import math
import random

import pytest

from rayzeros import (
    DegenerateTangency,
    all_zeros,
    analyze_ray,
    bracket,
    f_value,
    predict_at,
    solve_ray,
    validate,
)

from conftest import valid_k_choices


def records_for(m, k, c):
    return all_zeros(validate(m, k, c))


class TestBracket:
    def test_quadratic_case(self):
        p = validate(2, 1, 1.0)
        a = analyze_ray(p, 0)
        (lo, hi), = bracket(a, 1.0)
        root = math.sqrt(2.0) - 1.0
        assert lo < root < hi
        assert f_value(p, a.ray, lo) * f_value(p, a.ray, hi) < 0

    def test_pair_split_at_extremum(self):
        p = validate(3, 1, 4.0)  # above the c0 ~ 1.89 threshold on ray 1
        a = analyze_ray(p, 1)
        pairs = bracket(a, 4.0)
        assert len(pairs) == 2
        (lo1, hi1), (lo2, hi2) = pairs
        assert hi1 == lo2 == a.r0
        for lo, hi in pairs:
            assert f_value(p, a.ray, lo) * f_value(p, a.ray, hi) < 0

    def test_unit_zero_case(self):
        # even ray with alpha = 0: the zero sits at exactly r = 1
        p = validate(4, 1, 2.0)
        a = analyze_ray(p, 2)
        (lo, hi), = bracket(a, 2.0)
        assert lo < 1.0 < hi

    def test_no_zero_cases_empty(self):
        p = validate(5, 4, 1.0)
        assert bracket(analyze_ray(p, 1), 1.0) == []

    def test_tangency_raises(self):
        a = analyze_ray(validate(3, 1, 1.0), 1)
        with pytest.raises(DegenerateTangency):
            bracket(a, a.c0)

    def test_strict_signs_across_cases(self):
        rng = random.Random(99)
        for _ in range(40):
            m = rng.randint(2, 11)
            k = rng.choice(valid_k_choices(m))
            c = 10.0 ** rng.uniform(-2, 2)
            p = validate(m, k, c)
            for j in range(2 * m):
                a = analyze_ray(p, j)
                for lo, hi in bracket(a, c):
                    assert 0 < lo < hi
                    assert f_value(p, a.ray, lo) * f_value(p, a.ray, hi) < 0


class TestSolveRay:
    def test_figure_counts_positive_k(self):
        assert len(records_for(5, 4, 3.0)) == 11

    def test_figure_counts_negative_k(self):
        assert len(records_for(5, -4, 1.0)) == 5

    def test_single_small_zero(self):
        p = validate(5, 4, 0.1)
        recs = solve_ray(p, analyze_ray(p, 0))
        assert len(recs) == 1
        assert 0 < recs[0].r < 1  # f(0)=-1 < 0 < f(1)=2c brackets it below 1

    def test_tangency_emits_single_degenerate_record(self):
        base = analyze_ray(validate(3, 1, 1.0), 1)
        p = validate(3, 1, base.c0)
        a = analyze_ray(p, 1)
        recs = solve_ray(p, a)
        assert len(recs) == 1
        assert recs[0].degenerate
        assert math.isclose(recs[0].r, a.r0, rel_tol=1e-12)
        assert recs[0].residual < 1e-8

    def test_quadratic_radius(self):
        p = validate(2, 1, 1.0)
        recs = solve_ray(p, analyze_ray(p, 0))
        assert len(recs) == 1
        assert math.isclose(recs[0].r, math.sqrt(2.0) - 1.0, rel_tol=1e-12)


class TestAllZeros:
    def test_example_counts(self):
        assert len(records_for(5, 4, 1.0)) == 7
        assert len(records_for(5, -4, 0.2)) == 9

    def test_sorted_by_ray_then_radius(self):
        recs = records_for(5, 4, 3.0)
        assert [(r.j, r.r) for r in recs] == sorted((r.j, r.r) for r in recs)

    def test_records_lie_on_their_rays(self):
        for recs, m in ((records_for(5, 4, 3.0), 5), (records_for(5, -4, 0.2), 5)):
            for rec in recs:
                want = rec.j * math.pi / m
                got = math.atan2(rec.z.imag, rec.z.real) % (2 * math.pi)
                diff = abs(got - want) % (2 * math.pi)
                assert min(diff, 2 * math.pi - diff) < 1e-12
                assert math.isclose(abs(rec.z), rec.r, rel_tol=1e-15)

    def test_axis_records_are_real(self):
        for rec in records_for(5, 4, 3.0):
            if rec.j in (0, 5):
                assert rec.z.imag == 0.0

    def test_conjugation_closure(self):
        for m, k, c in ((5, 4, 3.0), (5, -4, 0.2), (7, 2, 0.5), (6, -1, 2.0)):
            recs = records_for(m, k, c)
            zs = [rec.z for rec in recs]
            for z in zs:
                best = min(abs(z.conjugate() - w) for w in zs)
                assert best <= 1e-12 * max(1.0, abs(z))

    def test_mirror_rays_pair_radii(self):
        """Rays j and 2m-j carry the same radii (f is identical on both)."""
        for m, k, c in ((5, 4, 3.0), (5, -4, 0.1), (8, 5, 2.5)):
            recs = records_for(m, k, c)
            for rec in recs:
                if 0 < rec.j < m:
                    partners = [o.r for o in recs if o.j == 2 * m - rec.j]
                    assert any(abs(rec.r - r) <= 1e-12 * rec.r for r in partners), rec

    def test_residual_bound(self):
        for m, k, c in ((5, 4, 3.0), (5, -4, 0.2), (9, -8, 0.3), (11, 3, 10.0)):
            p = validate(m, k, c)
            for rec in all_zeros(p):
                assert rec.residual <= 1e-10 * max(1.0, abs(rec.z) ** m)

    def test_count_agreement_with_prediction(self):
        rng = random.Random(31415)
        for _ in range(40):
            m = rng.randint(2, 13)
            k = rng.choice(valid_k_choices(m))
            c = 10.0 ** rng.uniform(-3, 3)
            p = validate(m, k, c)
            # stay off the tangency bands: the prediction itself flags those
            if any(abs(c - a.c0) <= 1e-9 * a.c0 for a in map(lambda j: analyze_ray(p, j), range(2 * m)) if a.c0):
                continue
            assert len(all_zeros(p)) == predict_at(p, c), (m, k, c)

    def test_deterministic(self):
        a = records_for(5, -4, 0.2)
        b = records_for(5, -4, 0.2)
        assert a == b


class TestDegenerateGlobal:
    def test_shared_tangency_counts(self):
        """(3,1): both positive-alpha odd rays hit c0 together; each reports a
        single flagged zero there and predict_at agrees."""
        c0 = analyze_ray(validate(3, 1, 1.0), 1).c0
        p = validate(3, 1, c0)
        recs = all_zeros(p)
        degs = [rec for rec in recs if rec.degenerate]
        assert len(degs) == 2
        assert sorted(rec.j for rec in degs) == [1, 5]
        assert len(recs) == predict_at(p, c0) == 5
