"""Per-ray analysis of f_j(r) = (-1)^j r^m + 2 c alpha r^k - 1.

Restricting p to ray j leaves this real function of the radius, and its
positive zeros are exactly the moduli of p's zeros on that ray.  The zero
count is decided by the sign of k, the parity of j, and the sign of alpha,
splitting into ten cases:

  alpha = 0            even j: one zero at r = 1;  odd j: none
  k > 0, even j        one zero for every c (any sign of alpha)
  k > 0, odd j, a < 0  none
  k > 0, odd j, a > 0  none below c0, two above (pair appears)
  k < 0, odd j, a < 0  none
  k < 0, even j, a < 0 one zero for every c
  k < 0, odd j, a > 0  one zero for every c
  k < 0, even j, a > 0 two below c0, none above (pair disappears)

In the two threshold cases f has a single interior extremum at
r0 = (2 c |k| alpha / m)^{1/(m-k)} whose value crosses 0 at

    c0 = beta^{-(m-k)/m},
    beta = (2 alpha)^{m/(m-k)} * ( (k/m)^{k/(m-k)} - (k/m)^{m/(m-k)} )    k > 0
    beta = (2 alpha)^{m/(m-k)} * ( (|k|/m)^{m/(m-k)} + (|k|/m)^{k/(m-k)} ) k < 0

beta is evaluated in the log domain; the exponent m/(m-k) grows like m when
|k| is close to m and would otherwise over/underflow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .family import (
    FamilyParams,
    RayDescriptor,
    Sign,
    alpha_from_residue,
    classify_ray,
    power_term,
)

__all__ = [
    "RayCase",
    "CountProfile",
    "RayAnalysis",
    "Threshold",
    "DEGENERACY_RTOL",
    "f_value",
    "f_derivative",
    "analyze_ray",
    "count_at",
    "degenerate_at",
    "extremum_radius",
    "thresholds",
]

# relative half-width of the band around c0 treated as an exact tangency;
# shared with the root finder so predicted counts always match emitted zeros
DEGENERACY_RTOL = 1e-9


class RayCase(Enum):
    EVEN_ALPHA_ZERO = "even_alpha_zero"
    ODD_ALPHA_ZERO = "odd_alpha_zero"
    POS_K_EVEN_POS = "pos_k_even_pos"
    POS_K_ODD_NEG = "pos_k_odd_neg"
    POS_K_EVEN_NEG = "pos_k_even_neg"
    POS_K_ODD_POS = "pos_k_odd_pos"
    NEG_K_ODD_NEG = "neg_k_odd_neg"
    NEG_K_EVEN_NEG = "neg_k_even_neg"
    NEG_K_ODD_POS = "neg_k_odd_pos"
    NEG_K_EVEN_POS = "neg_k_even_pos"


# (count below c0, count at c0, count above c0); constant cases repeat one value
_PROFILES: dict[RayCase, tuple[int, int, int]] = {
    RayCase.EVEN_ALPHA_ZERO: (1, 1, 1),
    RayCase.ODD_ALPHA_ZERO: (0, 0, 0),
    RayCase.POS_K_EVEN_POS: (1, 1, 1),
    RayCase.POS_K_ODD_NEG: (0, 0, 0),
    RayCase.POS_K_EVEN_NEG: (1, 1, 1),
    RayCase.POS_K_ODD_POS: (0, 1, 2),
    RayCase.NEG_K_ODD_NEG: (0, 0, 0),
    RayCase.NEG_K_EVEN_NEG: (1, 1, 1),
    RayCase.NEG_K_ODD_POS: (1, 1, 1),
    RayCase.NEG_K_EVEN_POS: (2, 1, 0),
}

THRESHOLD_CASES = frozenset({RayCase.POS_K_ODD_POS, RayCase.NEG_K_EVEN_POS})
EXTREMUM_CASES = THRESHOLD_CASES | {RayCase.POS_K_EVEN_NEG}


@dataclass(frozen=True, slots=True)
class CountProfile:
    below: int
    at_threshold: int
    above: int


@dataclass(frozen=True, slots=True)
class RayAnalysis:
    """Everything the counting and root finding need to know about one ray.

    ``r0`` is the extremum radius at params.c (None when f is monotone on the
    ray); ``c0``/``beta`` exist only for the two threshold cases and do not
    depend on c.  ``log_beta`` backs beta for parameter ranges where exp
    under/overflows.
    """

    params: FamilyParams
    ray: RayDescriptor
    alpha: float
    case: RayCase
    profile: CountProfile
    r0: float | None = None
    beta: float | None = None
    log_beta: float | None = None
    c0: float | None = None


@dataclass(frozen=True, slots=True)
class Threshold:
    """A critical parameter value and the rays that share it exactly."""

    c0: float
    rays: tuple[int, ...]
    alpha: float
    residue_class: int


def _case_of(k: int, parity: int, alpha_sign: Sign) -> RayCase:
    if alpha_sign == Sign.ZERO:
        return RayCase.EVEN_ALPHA_ZERO if parity == 0 else RayCase.ODD_ALPHA_ZERO
    if k > 0:
        if parity == 0:
            return RayCase.POS_K_EVEN_POS if alpha_sign > 0 else RayCase.POS_K_EVEN_NEG
        return RayCase.POS_K_ODD_POS if alpha_sign > 0 else RayCase.POS_K_ODD_NEG
    if parity == 0:
        return RayCase.NEG_K_EVEN_POS if alpha_sign > 0 else RayCase.NEG_K_EVEN_NEG
    return RayCase.NEG_K_ODD_POS if alpha_sign > 0 else RayCase.NEG_K_ODD_NEG


def f_value(params: FamilyParams, ray: RayDescriptor, r: float) -> float:
    """(-1)^j r^m + 2 c alpha r^k - 1, with overflow resolved by dominance."""
    if r <= 0:
        raise ValueError(f"need r > 0, got {r}")
    sgn = -1.0 if ray.parity else 1.0
    alpha = alpha_from_residue(params.m, ray.residue)
    tm = power_term(sgn, r, params.m)
    tk = power_term(2.0 * params.c * alpha, r, params.k)
    if math.isinf(tm) and math.isinf(tk) and (tm > 0) != (tk > 0):
        return tm  # both overflow only for r > 1, k > 0: degree m wins
    return tm + tk - 1.0


def f_derivative(params: FamilyParams, ray: RayDescriptor, r: float) -> float:
    """f'(r) = (-1)^j m r^{m-1} + 2 c k alpha r^{k-1}."""
    if r <= 0:
        raise ValueError(f"need r > 0, got {r}")
    sgn = -1.0 if ray.parity else 1.0
    alpha = alpha_from_residue(params.m, ray.residue)
    tm = power_term(sgn * params.m, r, params.m - 1)
    tk = power_term(2.0 * params.c * params.k * alpha, r, params.k - 1)
    if math.isinf(tm) and math.isinf(tk) and (tm > 0) != (tk > 0):
        return tm
    return tm + tk


def _log_beta(m: int, k: int, alpha: float) -> float:
    """log of the threshold constant, for alpha > 0.

    Uses the factored forms
      k > 0: beta = (2a)^{m/(m-k)} (k/m)^{k/(m-k)} (m-k)/m
      k < 0: beta = (2a)^{m/(m-k)} (|k|/m)^{k/(m-k)} (m+|k|)/m
    which keep every factor positive.
    """
    a = abs(k)
    core = (m * math.log(2.0 * alpha) + k * math.log(a / m)) / (m - k)
    return core + math.log((m - k) / m if k > 0 else (m + a) / m)


def _r0(m: int, k: int, alpha: float, c: float) -> float:
    # (2 c |k| |alpha| / m)^{1/(m-k)}; covers the k>0 even/negative-alpha case
    # where the sign of alpha is absorbed by the sign of k in the derivative
    return math.exp(
        (math.log(2.0 * c) + math.log(abs(k)) + math.log(abs(alpha)) - math.log(m))
        / (m - k)
    )


def analyze_ray(params: FamilyParams, j: int) -> RayAnalysis:
    """Case label, count profile, and the closed-form critical quantities for ray j."""
    ray = classify_ray(params, j)
    alpha = alpha_from_residue(params.m, ray.residue)
    case = _case_of(params.k, ray.parity, ray.alpha_sign)
    below, at, above = _PROFILES[case]
    profile = CountProfile(below=below, at_threshold=at, above=above)

    r0 = beta = log_beta = c0 = None
    if case in EXTREMUM_CASES:
        r0 = _r0(params.m, params.k, alpha, params.c)
    if case in THRESHOLD_CASES:
        log_beta = _log_beta(params.m, params.k, alpha)
        beta = math.exp(log_beta)
        c0 = math.exp(-(params.m - params.k) / params.m * log_beta)
    return RayAnalysis(
        params=params,
        ray=ray,
        alpha=alpha,
        case=case,
        profile=profile,
        r0=r0,
        beta=beta,
        log_beta=log_beta,
        c0=c0,
    )


def degenerate_at(analysis: RayAnalysis, c: float) -> bool:
    """True when c sits in the tangency band around the ray's threshold."""
    return analysis.c0 is not None and abs(c - analysis.c0) <= DEGENERACY_RTOL * analysis.c0


def count_at(analysis: RayAnalysis, c: float) -> int:
    """Zero count of the ray at parameter c.

    Inside the tangency band the merged pair counts as 1; degenerate_at
    carries the flag.
    """
    if c <= 0:
        raise ValueError(f"need c > 0, got {c}")
    p = analysis.profile
    if analysis.c0 is None:
        return p.below
    if degenerate_at(analysis, c):
        return p.at_threshold
    return p.below if c < analysis.c0 else p.above


def extremum_radius(analysis: RayAnalysis, c: float) -> float | None:
    """The critical radius r0 recomputed at an arbitrary c (None if f is monotone)."""
    if analysis.case not in EXTREMUM_CASES:
        return None
    if c <= 0:
        raise ValueError(f"need c > 0, got {c}")
    return _r0(analysis.params.m, analysis.params.k, analysis.alpha, c)


def thresholds(params: FamilyParams) -> list[Threshold]:
    """Distinct critical values of c, each with every ray sharing it.

    Rays are grouped by the residue class min(t, 2m-t): two rays have equal
    alpha (hence exactly equal c0) iff their residues agree up to that
    reflection, so deduplication is exact integer bookkeeping, never a
    floating-point comparison.
    """
    m = params.m
    groups: dict[int, list[int]] = {}
    for j in range(2 * m):
        ray = classify_ray(params, j)
        case = _case_of(params.k, ray.parity, ray.alpha_sign)
        if case in THRESHOLD_CASES:
            cls = min(ray.residue, 2 * m - ray.residue)
            groups.setdefault(cls, []).append(j)
    out = []
    for cls, rays in groups.items():
        alpha = alpha_from_residue(m, cls)
        c0 = math.exp(-(m - params.k) / m * _log_beta(m, params.k, alpha))
        out.append(Threshold(c0=c0, rays=tuple(sorted(rays)), alpha=alpha, residue_class=cls))
    out.sort(key=lambda th: th.c0)
    return out
