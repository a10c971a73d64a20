"""Closed forms for the d = 3 trisection sums and a parity lemma."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import intpoly
from .bounds import section_sum


def multisection_closed(n: int) -> list[int]:
    """3^(m-1) t^(m+2) (1+t)^2 for n = 2m, 3^m t^(m+3) (1+t) for n = 2m+1."""
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    m, odd = divmod(n, 2)
    if odd:
        return intpoly.mul(intpoly.monomial(m + 3, 3 ** m), [1, 1])
    return intpoly.mul(intpoly.monomial(m + 2, 3 ** (m - 1)), [1, 2, 1])


def multisection_degrees(n: int) -> range:
    """Degrees i where the closed form is checked: n//2 + 2 through (n+9)//2.

    For odd n this also includes i = m + 2, just below the summation range,
    where the sum vanishes.
    """
    return range(n // 2 + 2, (n + 9) // 2 + 1)


def multisection_direct(n: int, i: int) -> int:
    """Sum of (-1)^(k+1) C(n, i+3k) over all integers k with 0 <= i+3k <= n."""
    if i not in multisection_degrees(n):
        raise ValueError(f"degree {i} outside {multisection_degrees(n)} for n={n}")
    return section_sum(n, 3, i)


def alternating_trisection(n: int) -> int:
    """C(n,0) - C(n,3) + C(n,6) - ..."""
    return sum((-1) ** k * comb(n, 3 * k) for k in range(n // 3 + 1))


@dataclass(frozen=True)
class ParityLemma:
    ell: int
    value: int
    odd: bool
    unsigned: int
    identity_holds: bool


def parity_lemma(ell: int) -> ParityLemma:
    """Sum over k >= 0, 3k+1 <= 2l of (-1)^k C(4l+1, 2l-1-3k), with 3A = 2^(4l) - 1."""
    if ell < 1:
        raise ValueError("ell must be positive")
    ks = range((2 * ell - 1) // 3 + 1)
    value = sum((-1) ** k * comb(4 * ell + 1, 2 * ell - 1 - 3 * k) for k in ks)
    unsigned = sum(comb(4 * ell + 1, 2 * ell - 1 - 3 * k) for k in ks)
    return ParityLemma(ell, value, value % 2 == 1, unsigned, 3 * unsigned == 2 ** (4 * ell) - 1)
