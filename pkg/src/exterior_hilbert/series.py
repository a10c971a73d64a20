"""Hilbert functions of E/(f), E/ann(f) and ann(f)/(f).

Everything is driven by the ranks of  .f : E_m -> E_{m+d}.  Since the map at
m and at n-m-d have equal rank, only source degrees m <= (n-d)/2 are ever
eliminated unless ``full=True`` is requested (used to test the symmetries).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb

from . import intpoly
from .forms import ExteriorForm
from .maps import rank as map_rank

log = logging.getLogger(__name__)


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def truncate_positive(p: list[int]) -> list[int]:
    """Keep the longest strictly positive prefix and zero the rest."""
    if not p or p[0] <= 0:
        raise ValueError("truncation needs a positive constant term")
    out = list(p)
    for i, c in enumerate(out):
        if c <= 0:
            out[i:] = [0] * (len(out) - i)
            break
    return out


def even_minimal_series(n: int, d: int) -> list[int]:
    """[(1 - t^d)(1 + t)^n], the generic series for even d."""
    if d % 2 or not 1 <= d <= n:
        raise ValueError(f"expected even d in 1..n, got d={d}, n={n}")
    product = intpoly.mul([1] + [0] * (d - 1) + [-1], intpoly.binomial_power(n))
    return truncate_positive(product)[:n + 1]


@dataclass
class RankProfile:
    """Ranks of  .f : E_m -> E_{m+d}  for m = 0..n-d, and which were eliminated."""

    n: int
    d: int
    ranks: list[int]
    computed: list[int] = field(default_factory=list)

    def __call__(self, m: int) -> int:
        if m < 0 or m > self.n - self.d:
            return 0
        return self.ranks[m]


def rank_profile(f: ExteriorForm, full: bool = False) -> RankProfile:
    n, d = f.n, f.degree
    if f.is_zero:
        raise ValueError("the zero form generates the zero ideal")
    top = n - d
    last = top if full else top // 2
    ranks = [0] * (top + 1)
    computed = []
    for m in range(last + 1):
        ranks[m] = map_rank(f, m)
        computed.append(m)
        log.debug("n=%d d=%d m=%d rank=%d", n, d, m, ranks[m])
    if not full:
        for m in range(last + 1, top + 1):
            ranks[m] = ranks[top - m]
    return RankProfile(n, d, ranks, computed)


@dataclass
class QuotientSeries:
    series: list[int]
    ranks: dict[int, int]


def hilbert_series_quotient(f: ExteriorForm, full: bool = False) -> QuotientSeries:
    """Hilbert function of E/(f) as a length n+1 list.

    Degrees up to (n+d)/2 come from ranks; the rest from the reflection
    HF(i) = C(n,i) - C(n,i-d) + HF(n+d-i).  With ``full`` every degree uses its
    own rank instead.
    """
    n, d = f.n, f.degree
    if d < 1:
        raise ValueError("the form must have positive degree")
    prof = rank_profile(f, full)
    h = [0] * (n + 1)
    cheap = (n + d) // 2
    for i in range(n + 1):
        if full or i <= cheap:
            h[i] = comb(n, i) - prof(i - d)
        else:
            h[i] = comb(n, i) - binom(n, i - d) + h[n + d - i]
    ranks = {m: prof(m) for m in range(0, n - d + 1) if full or m <= cheap - d}
    return QuotientSeries(h, ranks)


def hilbert_series_ann_quotient(f: ExteriorForm, full: bool = False) -> list[int]:
    """HF(E/ann(f), i) = rank of  .f : E_i -> E_{i+d}."""
    prof = rank_profile(f, full)
    return [prof(i) for i in range(f.n + 1)]


def ann_mod_ideal_hf(f: ExteriorForm, full: bool = False) -> list[int]:
    """HF(ann(f)/(f), i) = dim ker(.f on E_i) - rank(.f : E_{i-d} -> E_i), odd d only."""
    if f.degree % 2 == 0:
        raise ValueError("ann(f) contains (f) only for odd degree")
    prof = rank_profile(f, full)
    d = f.degree
    return [comb(f.n, i) - prof(i) - prof(i - d) for i in range(f.n + 1)]


def lex_compare(h: list[int], a: list[int]) -> int:
    """-1, 0 or 1 as h is lexicographically below, equal to or above a."""
    return (h > a) - (h < a)
