"""Square-free monomials as bit masks, wedge signs and colex subset ranking.

A monomial x_I is stored as an ``int`` whose bit ``i - 1`` is set for every
variable index ``i`` in I.  Variables are numbered from 1.  With this encoding
the k-subsets of {1..n} listed by increasing integer value are exactly the
colexicographic order, which is the order used for every matrix index.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

MAX_VARIABLES = 62

Monomial = int


def check_n(n: int) -> None:
    if not 0 <= n <= MAX_VARIABLES:
        raise ValueError(f"number of variables must be in 0..{MAX_VARIABLES}, got {n}")


def monomial(indices: Iterable[int], n: int | None = None) -> Monomial:
    """Bit mask of a set of 1-based indices; duplicates are rejected."""
    mask = 0
    for i in indices:
        if i < 1 or (n is not None and i > n):
            raise ValueError(f"variable index {i} out of range")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated variable index {i}")
        mask |= bit
    return mask


def indices(mask: Monomial) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def degree(mask: Monomial) -> int:
    return mask.bit_count()


def full_mask(n: int) -> Monomial:
    return (1 << n) - 1


def complement(mask: Monomial, n: int) -> Monomial:
    return full_mask(n) & ~mask


def wedge_sign(a: Monomial, b: Monomial) -> int:
    """Sign of x_A x_B relative to the sorted monomial x_{A u B}; 0 if A, B meet.

    Counts, for every index of B, the indices of A above it.
    """
    if a & b:
        return 0
    inversions = 0
    while b:
        low = b & -b
        inversions += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if inversions & 1 else 1


def triple_sign(a: Monomial, b: Monomial, c: Monomial) -> int:
    if a & b or a & c or b & c:
        return 0
    return wedge_sign(a, b) * wedge_sign(a | b, c)


def complement_sign(mask: Monomial, n: int) -> int:
    """The sign s with s * xhat_I * x_I = x_1 ... x_n."""
    return wedge_sign(complement(mask, n), mask)


def subset_rank(mask: Monomial) -> int:
    """Colex rank of a subset among all subsets of the same size."""
    rank = 0
    k = 0
    pos = 0
    while mask:
        if mask & 1:
            k += 1
            rank += comb(pos, k)
        mask >>= 1
        pos += 1
    return rank


def subset_unrank(k: int, index: int, n: int) -> Monomial:
    check_n(n)
    if not 0 <= k <= n or not 0 <= index < comb(n, k):
        raise IndexError(f"no {k}-subset of {{1..{n}}} has colex index {index}")
    mask = 0
    pos = n - 1
    for j in range(k, 0, -1):
        while comb(pos, j) > index:
            pos -= 1
        index -= comb(pos, j)
        mask |= 1 << pos
        pos -= 1
    return mask


@lru_cache(maxsize=256)
def subsets(n: int, k: int) -> tuple[Monomial, ...]:
    """All k-subsets of {1..n} as masks, in colex order."""
    check_n(n)
    if not 0 <= k <= n:
        return ()
    masks = [sum(1 << i for i in c) for c in combinations(range(n), k)]
    masks.sort()
    return tuple(masks)


@lru_cache(maxsize=256)
def subset_array(n: int, k: int) -> np.ndarray:
    arr = np.array(subsets(n, k), dtype=np.int64)
    arr.flags.writeable = False
    return arr


@lru_cache(maxsize=64)
def _binomial_table(n: int) -> np.ndarray:
    table = np.zeros((n + 1, n + 2), dtype=np.int64)
    for a in range(n + 1):
        for b in range(n + 2):
            table[a, b] = comb(a, b)
    return table


def rank_array(masks: np.ndarray, n: int) -> np.ndarray:
    """Vectorized :func:`subset_rank`."""
    masks = np.asarray(masks, dtype=np.int64)
    table = _binomial_table(n)
    rank = np.zeros(masks.shape, dtype=np.int64)
    count = np.zeros(masks.shape, dtype=np.int64)
    for pos in range(n):
        bit = (masks >> pos) & 1
        count += bit
        rank += bit * table[pos, count]
    return rank


def wedge_sign_array(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Vectorized :func:`wedge_sign` with numpy broadcasting."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inversions = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
    for pos in range(n):
        inversions += ((b >> pos) & 1) * np.bitwise_count(a >> (pos + 1))
    sign = 1 - 2 * (inversions & 1)
    return np.where((a & b) == 0, sign, 0)
