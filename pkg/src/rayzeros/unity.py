"""Half-plane census of the powers of omega = e^{i k pi / m}.

The ray weights alpha_j = cos(k j pi / m) are the real parts of the powers
omega^j.  When k is odd omega generates all 2m-th roots of unity; when k is
even (forcing m odd) it generates the m-th roots and hits each twice, once
from an even j and once from an odd j.  Counting exponents j in [0, 2m) by
parity and by the sign of Re omega^j is all the global zero count needs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .family import FamilyParams, Sign, classify_ray

__all__ = ["ParityCensus", "positive_halfplane_count", "census", "group_order"]


@dataclass(frozen=True, slots=True)
class ParityCensus:
    """Counts of j in [0, 2m) split by parity of j and sign of Re omega^j."""

    even_pos: int
    even_zero: int
    even_neg: int
    odd_pos: int
    odd_zero: int
    odd_neg: int


def positive_halfplane_count(q: int) -> int:
    """Number of q-th roots of unity with strictly positive real part.

    The roots sit at angles 2 pi j / q; those in the open right half-plane
    are the integers j with -q/4 < j < q/4, of which there are
    2*floor((q-1)/4) + 1.
    """
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    return 2 * ((q - 1) // 4) + 1


def group_order(params: FamilyParams) -> int:
    """Order of the cyclic group generated by omega: 2m for odd k, m for even k."""
    return 2 * params.m if params.k % 2 else params.m


def census(params: FamilyParams) -> ParityCensus:
    """Six-way parity/sign census by direct enumeration of the 2m rays.

    Uses the exact integer classifier, so boundary rays (Re omega^j = 0)
    are never miscounted.  Which power lands on which point of the circle is
    irrelevant here; only the counts matter.  Independent of c.
    """
    counts = {
        (0, Sign.POSITIVE): 0,
        (0, Sign.ZERO): 0,
        (0, Sign.NEGATIVE): 0,
        (1, Sign.POSITIVE): 0,
        (1, Sign.ZERO): 0,
        (1, Sign.NEGATIVE): 0,
    }
    for j in range(2 * params.m):
        ray = classify_ray(params, j)
        counts[(ray.parity, ray.alpha_sign)] += 1
    return ParityCensus(
        even_pos=counts[(0, Sign.POSITIVE)],
        even_zero=counts[(0, Sign.ZERO)],
        even_neg=counts[(0, Sign.NEGATIVE)],
        odd_pos=counts[(1, Sign.POSITIVE)],
        odd_zero=counts[(1, Sign.ZERO)],
        odd_neg=counts[(1, Sign.NEGATIVE)],
    )
