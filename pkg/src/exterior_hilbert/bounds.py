"""Lower bound for the Hilbert series of E/(f) when f has odd degree."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

from . import intpoly
from .forms import ExteriorForm
from .series import binom, rank_profile


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def _b(n: int, d: int, i: int) -> int:
    if 2 * i <= n + d:
        return sum(_sign(k) * comb(n, i - k * d) for k in range(i // d + 1))
    return sum(_sign(k + 1) * comb(n, i + k * d) for k in range(1, (n - i) // d + 1))


def section_sum(n: int, d: int, i: int) -> int:
    """Sum over all integers k with 0 <= i + kd <= n of (-1)^(k+1) C(n, i+kd)."""
    ks = range(-(i // d), (n - i) // d + 1)
    return sum(_sign(k + 1) * comb(n, i + k * d) for k in ks if 0 <= i + k * d <= n)


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    b: list[int]
    c: list[int]
    a: list[int]
    p: list[int]
    p_shift: int
    b_identity_checked: bool

    def numerator(self) -> list[int]:
        """t^s p(t) + (1+t)^n, the numerator of B(t) over 1 + t^d."""
        return intpoly.add(intpoly.shift(self.p, self.p_shift), intpoly.binomial_power(self.n))

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "b": self.b, "c": self.c, "a": self.a, "p": self.p,
                "p_shift": self.p_shift}


def lower_bound(n: int, d: int) -> BoundReport:
    """Coefficient sequences b, c, a = b + c and the numerator polynomial p(t)."""
    if d % 2 == 0 or not 1 <= d <= n:
        raise ValueError(f"expected odd d in 1..n, got n={n}, d={d}")
    b = [_b(n, d, i) for i in range(n + 1)]
    c = [0] * (n + 1)
    if (n - d) % 2 == 0:
        half = (n - d) // 2
        if half % 2 == 1 and b[half] % 2 == 1:
            c[(n + d) // 2] = 1
    a = [x + y for x, y in zip(b, c)]

    s = (n + d) // 2 + 1
    p = intpoly.trim([section_sum(n, d, i) for i in range(s, s + d)])

    one_plus_td = intpoly.add([1], intpoly.monomial(d))
    lhs = intpoly.mul(b, one_plus_td)
    numerator = intpoly.add(intpoly.shift(p, s), intpoly.binomial_power(n))
    if lhs != numerator:
        raise ArithmeticError(f"B(t)(1+t^d) identity fails for n={n}, d={d}")
    if intpoly.pad(intpoly.divexact(numerator, one_plus_td), n + 1) != b:
        raise ArithmeticError(f"B(t) quotient disagrees with b for n={n}, d={d}")
    return BoundReport(n, d, b, c, a, p, s, True)


class Verdict(str, enum.Enum):
    EQUALS_BOUND = "EQUALS_BOUND"
    EXCEEDS_BOUND = "EXCEEDS_BOUND"


@dataclass(frozen=True)
class DiagnosticRow:
    i: int
    ann_dim: int
    ideal_dim: int
    c: int

    @property
    def excess(self) -> int:
        return self.ann_dim - self.ideal_dim - self.c


@dataclass(frozen=True)
class EqualityDiagnostic:
    n: int
    d: int
    rows: list[DiagnosticRow]

    @property
    def verdict(self) -> Verdict:
        return Verdict.EQUALS_BOUND if all(r.excess == 0 for r in self.rows) else Verdict.EXCEEDS_BOUND

    @property
    def first_failure(self) -> DiagnosticRow | None:
        return next((r for r in self.rows if r.excess), None)


def equality_diagnostic(f: ExteriorForm) -> EqualityDiagnostic:
    """Compare dim ann(f)_i with dim (f)_i + c_i for i <= (n-d)/2.

    The series of E/(f) equals the lower bound exactly when every excess is 0.
    """
    n, d = f.n, f.degree
    if d % 2 == 0:
        raise ValueError("the diagnostic applies to odd degree forms")
    prof = rank_profile(f)
    rows = []
    for i in range((n - d) // 2 + 1):
        ann_dim = comb(n, i) - prof(i)
        ideal_dim = prof(i - d)
        c = int(2 * i == n - d and i % 2 == 1 and (ideal_dim - binom(n, i)) % 2 == 1)
        rows.append(DiagnosticRow(i, ann_dim, ideal_dim, c))
    return EqualityDiagnostic(n, d, rows)
