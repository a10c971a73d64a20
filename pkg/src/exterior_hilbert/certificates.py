"""Explicit forms whose Hilbert series are known, and their verification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb, factorial

from .bounds import lower_bound
from .combinatorics import full_mask, monomial, subsets
from .fields import QQ, Field, GF, PrimeField
from .forms import ExteriorForm
from .maps import kernel_basis
from .series import even_minimal_series, hilbert_series_quotient

RATIONAL_MAX_N = 11


class CertificateError(ValueError):
    """The requested certificate does not exist for these parameters."""


def h_form(n: int, d: int, field: Field = QQ) -> ExteriorForm:
    """Sum of all square-free monomials of degree d."""
    if not 0 <= d <= n:
        raise CertificateError(f"need 0 <= d <= n, got n={n}, d={d}")
    return ExteriorForm(n, d, {m: 1 for m in subsets(n, d)}, field)


def cyclic_form(n: int, field: Field = QQ) -> ExteriorForm:
    """Sum of the n cyclic runs x_s x_{s+1} ... x_{s+n-4} (indices mod n)."""
    if n % 2 or n < 6:
        raise CertificateError(f"cyclic certificate needs even n >= 6, got {n}")
    runs = [[(s + j) % n + 1 for j in range(n - 3)] for s in range(n)]
    return ExteriorForm.from_terms(n, [(1, run) for run in runs], field)


VINBERG_TERMS = (
    ((1, 2, 3), (4, 5, 6), (7, 8, 9)),
    ((1, 4, 7), (2, 5, 8), (3, 6, 9)),
    ((1, 5, 9), (2, 6, 7), (3, 4, 8)),
    ((1, 6, 8), (2, 4, 9), (3, 5, 7)),
)


def vinberg_forms(field: Field = QQ) -> tuple[ExteriorForm, ...]:
    """(p1, p2, p3, p4, f) on nine variables with f = 2 p1 + 2 p2 + p3 + p4."""
    ps = [ExteriorForm.from_terms(9, [(1, t) for t in triple], field) for triple in VINBERG_TERMS]
    f = ps[0].scale(2) + ps[1].scale(2) + ps[2] + ps[3]
    return (*ps, f)


class CertificateName(str, enum.Enum):
    H_FORM = "h_form"
    N_MINUS_2 = "n_minus_2"
    CYCLIC = "cyclic"
    VINBERG9 = "vinberg9"
    H2D_POWER = "h2d_power"


def expected_series(name: CertificateName | str, n: int, d: int | None = None) -> list[int]:
    name = CertificateName(name)
    if name is CertificateName.H_FORM:
        if d is None or d % 2:
            raise CertificateError("the h_form certificate needs an even degree")
        h = even_minimal_series(n, d)
    elif name is CertificateName.N_MINUS_2:
        h = [comb(n, i) for i in range(n - 2)] + [comb(n, n - 2) - 1, 1, 0]
    elif name is CertificateName.CYCLIC:
        h = [comb(n, i) for i in range(n - 3)] + [comb(n, n - 3) - 1, comb(n, n - 2) - n, 0, 0]
    elif name is CertificateName.VINBERG9:
        h = [1, 9, 36, comb(9, 3) - 1, comb(9, 4) - 9, comb(9, 5) - comb(9, 2), 4, 0, 0, 0]
    else:
        raise CertificateError(f"{name.value} has no closed-form series")
    return h


def certificate_form(name: CertificateName | str, n: int, field: Field = QQ,
                     d: int | None = None) -> ExteriorForm:
    name = CertificateName(name)
    if name is CertificateName.H_FORM:
        if d is None:
            raise CertificateError("the h_form certificate needs a degree")
        return h_form(n, d, field)
    if name is CertificateName.N_MINUS_2:
        if n % 2 == 0 or n < 3:
            raise CertificateError(f"n_minus_2 certificate needs odd n >= 3, got {n}")
        return h_form(n, n - 2, field)
    if name is CertificateName.CYCLIC:
        return cyclic_form(n, field)
    if name is CertificateName.VINBERG9:
        if n != 9:
            raise CertificateError(f"vinberg9 certificate needs n = 9, got {n}")
        return vinberg_forms(field)[-1]
    raise CertificateError(f"{name.value} is not a series certificate")


@dataclass
class CertificateReport:
    name: str
    n: int
    d: int
    field: str
    series: list[int]
    expected: list[int]
    bound: list[int]
    ranks: dict[int, int]
    first_mismatch: int | None
    matches_bound: bool
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None and self.extra.get("ok", True)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {"name": self.name, "n": self.n, "d": self.d, "field": self.field,
                "series": self.series, "expected": self.expected, "bound": self.bound,
                "ranks": {str(k): v for k, v in self.ranks.items()},
                "first_mismatch": self.first_mismatch, "matches_bound": self.matches_bound,
                "extra": self.extra, "verdict": self.verdict}


def _default_field(n: int) -> Field:
    return QQ if n <= RATIONAL_MAX_N else GF()


def verify_certificate(name: CertificateName | str, n: int, field: Field | None = None,
                       d: int | None = None) -> CertificateReport:
    """Compute HS(E/(f)) for a certificate form and compare with its closed form.

    Runs over QQ up to n = 11 and over GF(p) beyond, unless ``field`` is given.
    ``d`` is only used by ``h_form`` (even d, compared with [(1-t^d)(1+t)^n]).
    """
    name = CertificateName(name)
    field = field or _default_field(n)
    if name is CertificateName.H2D_POWER:
        return _verify_h2d(n, field)
    expected = expected_series(name, n, d)
    f = certificate_form(name, n, field, d)
    result = hilbert_series_quotient(f)
    series = result.series
    mismatch = next((i for i, (x, y) in enumerate(zip(series, expected)) if x != y), None)
    d = f.degree
    bound = lower_bound(n, d).a if d % 2 else []
    extra: dict = {}
    if name is CertificateName.VINBERG9:
        kernel = kernel_basis(f, 3)
        ps = vinberg_forms(field)[:4]
        annihilated = all(p.wedge(f).is_zero for p in ps)
        extra = {"kernel_dim_3": len(kernel), "p_annihilate_f": annihilated,
                 "ok": len(kernel) == 4 and annihilated}
    return CertificateReport(name.value, n, d, str(field), series, expected, bound, result.ranks,
                             mismatch, series == bound, extra)


def _verify_h2d(n: int, field: Field) -> CertificateReport:
    checks = {str(k): h2d_power_identity(n, k, field) for k in range(1, n // 2 + 1)}
    ok = all(checks.values())
    return CertificateReport(CertificateName.H2D_POWER.value, n, 2, str(field), [], [], [], {},
                             None if ok else 0, False, {"identities": checks, "ok": ok})


def h2d_power_identity(n: int, d: int, field: Field = QQ) -> bool:
    """Whether h_2^d / d! equals h_{2d}."""
    if 2 * d > n or d < 1:
        raise CertificateError(f"need 1 <= d and 2d <= n, got n={n}, d={d}")
    if isinstance(field, PrimeField) and field.p <= d:
        raise CertificateError(f"{d}! is not invertible in {field}")
    power = h_form(n, 2, field).power(d)
    return power.scale(field.inv(field(factorial(d)))) == h_form(n, 2 * d, field)


def cyclic_surjectivity_products(n: int, field: Field = QQ) -> list[tuple[int, tuple[int, int], ExteriorForm]]:
    """For j = 1..n the product x_{j+1} x_{j-1} f, which should be +-xhat_j."""
    f = cyclic_form(n, field)
    out = []
    for j in range(1, n + 1):
        a, b = j % n + 1, (j - 2) % n + 1
        out.append((j, (a, b), ExteriorForm.from_terms(n, [(1, (a, b))], field).wedge(f)))
    return out


def is_signed_hat(g: ExteriorForm, j: int) -> bool:
    target = full_mask(g.n) & ~monomial([j])
    return len(g) == 1 and next(iter(g.terms)) == target and g.coefficient(target) in (
        g.field(1), g.field(-1))


def sum_of_variables(n: int, field: Field = QQ) -> ExteriorForm:
    return ExteriorForm(n, 1, {1 << i: 1 for i in range(n)}, field)

