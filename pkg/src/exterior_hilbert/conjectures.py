"""Two published conjectures on generic odd degree forms.

``mss_series`` is the conjectured generic series for d = 3.  The constant of
the d >= 5 conjecture is implemented literally so that it can be refuted
against the rank parity of the middle map.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from math import comb

from . import intpoly
from .bounds import lower_bound
from .series import binom


def _l_poly(n: int, c1: int, c2: int) -> list[int]:
    ell, r = divmod(n, 4)
    one_t = [1, 1]
    if r == 0:
        return intpoly.mul(intpoly.monomial(2 * ell - 1, 3 ** (2 * ell - 1)), intpoly.mul(one_t, one_t))
    if r == 1:
        quad = [1, 3 ** c2 - 1, 1]
        return intpoly.mul(intpoly.monomial(2 * ell - 1, c1), intpoly.mul(one_t, quad))
    if r == 2:
        return intpoly.mul(intpoly.monomial(2 * ell, 3 ** (2 * ell)), intpoly.mul(one_t, one_t))
    return intpoly.mul(intpoly.monomial(2 * ell + 1, 3 ** (2 * ell + 1)), one_t)


def mss_series(n: int, c1: int = 1, c2: int | None = None) -> list[int]:
    """(t^3 L_n(t) + (1+t)^n) / (1 + t^3) as a length n+1 list.

    ``c1`` and ``c2`` only enter when n = 1 mod 4; ``c2`` defaults to n // 2.
    A non-exact division raises :class:`intpoly.InexactDivisionError`.
    """
    if n < 3 or (n % 4 == 1 and n < 5):
        raise ValueError(f"n must be at least 3 (and not 1 mod 4 below 5), got {n}")
    if c2 is None:
        c2 = n // 2
    numerator = intpoly.add(intpoly.shift(_l_poly(n, c1, c2), 3), intpoly.binomial_power(n))
    quotient = intpoly.divexact(numerator, [1, 0, 0, 1])
    return intpoly.pad(quotient, n + 1)


def conjecture61_c(n: int, d: int, i: int) -> int:
    """1 iff i = v(v+1)/2, n-d = v^2/2 + 5v/2 - 1 and d = 5 + 2vs for some v > 0, s >= 0."""
    if d % 2 == 0 or d < 5:
        raise ValueError(f"the constant is defined for odd d >= 5, got d={d}")
    for v in range(1, n + 1):
        if v * (v + 1) // 2 != i or v * v + 5 * v - 2 != 2 * (n - d):
            continue
        if (d - 5) % (2 * v) == 0:
            return 1
    return 0


def conjecture61_annihilator(n: int, d: int) -> list[int]:
    """HF(ann(f), i) for generic f as predicted by the d >= 5 conjecture, i = 0..n.

    Uses HF((f), i) = C(n, i-d) - HF(ann(f), i-d) recursively.
    """
    ann = [0] * (n + 1)
    for i in range(n + 1):
        ideal = binom(n, i - d) - (ann[i - d] if i >= d else 0)
        ann[i] = conjecture61_c(n, d, i) + max(ideal, binom(n, i) - binom(n, i + d))
    return ann


class RefuteVerdict(str, enum.Enum):
    REFUTED = "REFUTED"
    CONSISTENT = "CONSISTENT"


@dataclass(frozen=True)
class RefutationReport:
    n: int
    d: int
    middle: int | None
    middle_odd: bool
    middle_binomial: int
    middle_binomial_odd: bool
    conjecture_c: int
    predicted_ann: list[int]
    bound_ann: list[int]
    bound_c_index: int | None
    verdict: RefuteVerdict

    def to_dict(self) -> dict:
        out = asdict(self)
        out["verdict"] = self.verdict.value
        return out


def refute_conjecture61(n: int = 21, d: int = 11) -> RefutationReport:
    """Confront the conjecture with the even rank of the skew middle map.

    When (n-d)/2 is odd, dim ann(f)_{(n-d)/2} must have the parity of
    C(n, (n-d)/2).  No matrix is built.
    """
    if d % 2 == 0 or not 5 <= d <= n:
        raise ValueError(f"expected odd 5 <= d <= n, got n={n}, d={d}")
    half = (n - d) // 2 if (n - d) % 2 == 0 else None
    predicted = conjecture61_annihilator(n, d)
    bound = lower_bound(n, d)
    bound_c_index = next((i for i, c in enumerate(bound.c) if c), None)
    top = (n - d) // 2
    bound_ann = [comb(n, i) - bound.a[i] for i in range(top + 1)]
    if bound_c_index is not None:
        bound_ann[top] += 1
    middle_odd = half is not None and half % 2 == 1
    middle_binomial = comb(n, half) if half is not None else 0
    conj_c = conjecture61_c(n, d, half) if half is not None else 0
    refuted = middle_odd and (predicted[half] - middle_binomial) % 2 == 1
    return RefutationReport(
        n=n, d=d, middle=half, middle_odd=middle_odd, middle_binomial=middle_binomial,
        middle_binomial_odd=middle_binomial % 2 == 1, conjecture_c=conj_c,
        predicted_ann=predicted[:top + 1], bound_ann=bound_ann, bound_c_index=bound_c_index,
        verdict=RefuteVerdict.REFUTED if refuted else RefuteVerdict.CONSISTENT)
