"""Locate every zero radius on a ray from brackets the case analysis guarantees.

Each case shape pins down the sign of f at small radii, at the
extremum r0 (when there is one), and at the outer bound
R = max(1, (2c+2)^{1/(m-|k|)}) + 1, beyond which the degree-m term dominates.
That yields one strict sign-change interval per zero: monotone cases bracket
directly, unimodal cases split at r0.  Radii are refined by bisection to a
relative width, then polished with the derivative; every accepted record
re-evaluates the full complex function and must pass the scaled residual
bound.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .family import FamilyParams, evaluate, power_term, unit_direction
from .rays import (
    RayAnalysis,
    RayCase,
    analyze_ray,
    count_at,
    degenerate_at,
    extremum_radius,
    f_derivative,
    f_value,
)

__all__ = [
    "Tolerances",
    "ZeroRecord",
    "BracketFailure",
    "DegenerateTangency",
    "outer_radius",
    "bracket",
    "solve_ray",
    "all_zeros",
]


class BracketFailure(ArithmeticError):
    """A sign change the case analysis promised could not be realized, or a
    refined zero failed the residual bound.  Never silently drops a zero."""


class DegenerateTangency(Exception):
    """c sits in the tangency band: the pair of zeros has merged at r0."""

    def __init__(self, r0: float):
        super().__init__(f"tangential double zero at r0={r0}")
        self.r0 = r0


@dataclass(frozen=True, slots=True)
class Tolerances:
    """Refinement and acceptance tolerances.

    radius_rtol: relative bracket width at which bisection stops.
    residual_rtol: accepted records must satisfy
        |p(z)| <= residual_rtol * max(1, |z|^m).
    """

    radius_rtol: float = 1e-12
    residual_rtol: float = 1e-10


@dataclass(frozen=True, slots=True)
class ZeroRecord:
    """A located zero: ray index, radius, complex position, recomputed residual."""

    j: int
    r: float
    z: complex
    residual: float
    degenerate: bool


def outer_radius(m: int, k: int, c: float) -> float:
    """R with |r^m| strictly dominant for r >= R on every ray."""
    return max(1.0, (2.0 * c + 2.0) ** (1.0 / (m - abs(k)))) + 1.0


def _sign_ok(v: float, want_negative: bool) -> bool:
    return (v < 0) if want_negative else (v > 0)


def _seek_lo(f, lo: float, want_negative: bool) -> float:
    """Shrink lo toward 0 until f(lo) has the required strict sign."""
    for _ in range(600):
        if _sign_ok(f(lo), want_negative):
            return lo
        lo /= 4.0
        if lo == 0.0:
            break
    raise BracketFailure("could not realize the inner bracket endpoint sign")


def _seek_hi(f, hi: float, want_negative: bool) -> float:
    """Grow hi until f(hi) has the required strict sign (defensive; one pass
    normally suffices because R is already dominant)."""
    for _ in range(80):
        if _sign_ok(f(hi), want_negative):
            return hi
        hi *= 2.0
    raise BracketFailure("could not realize the outer bracket endpoint sign")


def bracket(analysis: RayAnalysis, c: float) -> list[tuple[float, float]]:
    """One strict sign-change interval per zero of f on the ray at parameter c.

    Raises DegenerateTangency inside the tangency band (the caller should
    report the single merged zero at r0 instead).
    """
    params = analysis.params
    if c != params.c:
        params = FamilyParams(params.m, params.k, float(c))
        analysis = analyze_ray(params, analysis.ray.j)
    n = count_at(analysis, c)
    if n == 0:
        return []
    if degenerate_at(analysis, c):
        raise DegenerateTangency(extremum_radius(analysis, c))

    m, k = params.m, params.k
    ray = analysis.ray
    alpha = analysis.alpha

    def f(r: float) -> float:
        return f_value(params, ray, r)

    hi = outer_radius(m, k, c)
    case = analysis.case

    if case in (RayCase.EVEN_ALPHA_ZERO, RayCase.POS_K_EVEN_POS):
        # f(0+) = -1, increasing to +inf
        lo = _seek_lo(f, 0.5, want_negative=True)
        return [(lo, _seek_hi(f, hi, want_negative=False))]
    if case is RayCase.POS_K_EVEN_NEG:
        # dips to a strictly negative minimum at r0, then climbs; split there
        lo = _seek_lo(f, analysis.r0, want_negative=True)
        return [(lo, _seek_hi(f, hi, want_negative=False))]
    if case is RayCase.NEG_K_EVEN_NEG:
        # increasing from -inf; f(1) = 2 c alpha < 0
        lo = _seek_lo(f, 1.0, want_negative=True)
        return [(lo, _seek_hi(f, hi, want_negative=False))]
    if case is RayCase.NEG_K_ODD_POS:
        # decreasing from +inf; the middle term dominates below (c*alpha/2)^(1/|k|)
        start = 0.9 * min(1.0, math.exp((math.log(c) + math.log(alpha) - math.log(2.0)) / abs(k)))
        lo = _seek_lo(f, start, want_negative=False)
        return [(lo, _seek_hi(f, hi, want_negative=True))]
    if case is RayCase.POS_K_ODD_POS:
        # c above c0: maximum at r0 is strictly positive, tails are negative
        r0 = extremum_radius(analysis, c)
        lo = _seek_lo(f, min(sys.float_info.min * 4.0, r0 / 2.0), want_negative=True)
        return [(lo, r0), (r0, _seek_hi(f, hi, want_negative=True))]
    if case is RayCase.NEG_K_EVEN_POS:
        # c below c0: minimum at r0 is strictly negative, both tails positive
        r0 = extremum_radius(analysis, c)
        start = 0.9 * min(r0, 1.0, math.exp((math.log(c) + math.log(alpha)) / abs(k)))
        lo = _seek_lo(f, start, want_negative=False)
        return [(lo, r0), (r0, _seek_hi(f, hi, want_negative=False))]
    raise BracketFailure(f"case {case} should have no zeros to bracket")


def _refine(f, fprime, lo: float, hi: float, radius_rtol: float) -> float:
    """Bisection to relative width, then a short derivative polish inside the bracket."""
    flo = f(lo)
    fhi = f(hi)
    if not (flo < 0) != (fhi < 0):
        raise BracketFailure(f"endpoint signs agree on [{lo}, {hi}]")
    lo_neg = flo < 0
    for _ in range(2000):
        if hi - lo <= radius_rtol * hi:
            break
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break  # float grid exhausted
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0) == lo_neg:
            lo = mid
        else:
            hi = mid
    r = 0.5 * (lo + hi)
    for _ in range(4):
        d = fprime(r)
        if d == 0.0 or not math.isfinite(d):
            break
        step = f(r) / d
        rn = r - step
        if not (lo <= rn <= hi) or rn == r:
            break
        r = rn
    return r


def _record(params: FamilyParams, j: int, r: float, degenerate: bool, tol: Tolerances) -> ZeroRecord:
    z = r * unit_direction(params.m, j)
    residual = abs(evaluate(params, z))
    if not degenerate:
        bound = tol.residual_rtol * max(1.0, power_term(1.0, r, params.m))
        if not residual <= bound:
            raise BracketFailure(
                f"residual {residual} exceeds {bound} at ray {j}, r={r}"
            )
    return ZeroRecord(j=j, r=r, z=z, residual=residual, degenerate=degenerate)


def solve_ray(
    params: FamilyParams, analysis: RayAnalysis, tolerances: Tolerances | None = None
) -> list[ZeroRecord]:
    """All zeros of p on the analyzed ray at params.c, refined and residual-checked."""
    tol = tolerances or Tolerances()
    c = params.c
    n = count_at(analysis, c)
    if n == 0:
        return []
    if degenerate_at(analysis, c):
        return [_record(params, analysis.ray.j, extremum_radius(analysis, c), True, tol)]

    intervals = bracket(analysis, c)
    if len(intervals) != n:
        raise BracketFailure(
            f"expected {n} brackets on ray {analysis.ray.j}, built {len(intervals)}"
        )

    def f(r: float) -> float:
        return f_value(params, analysis.ray, r)

    def fp(r: float) -> float:
        return f_derivative(params, analysis.ray, r)

    records = [
        _record(params, analysis.ray.j, _refine(f, fp, lo, hi, tol.radius_rtol), False, tol)
        for lo, hi in intervals
    ]
    records.sort(key=lambda rec: rec.r)
    return records


def all_zeros(params: FamilyParams, tolerances: Tolerances | None = None) -> list[ZeroRecord]:
    """Every zero of p, ordered by ray index then radius."""
    out: list[ZeroRecord] = []
    for j in range(2 * params.m):
        out.extend(solve_ray(params, analyze_ray(params, j), tolerances))
    return out
