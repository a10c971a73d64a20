"""Integer polynomials as coefficient lists, lowest degree first."""

from __future__ import annotations

from math import comb
from typing import Sequence

Poly = list[int]


class InexactDivisionError(ArithmeticError):
    pass


def trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def pad(p: Sequence[int], length: int) -> Poly:
    p = trim(p)
    if len(p) > length:
        raise ValueError(f"polynomial of degree {len(p) - 1} does not fit length {length}")
    return p + [0] * (length - len(p))


def add(*polys: Sequence[int]) -> Poly:
    out = [0] * max((len(p) for p in polys), default=0)
    for p in polys:
        for i, c in enumerate(p):
            out[i] += c
    return trim(out)


def sub(p: Sequence[int], q: Sequence[int]) -> Poly:
    return add(p, [-c for c in q])


def mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def shift(p: Sequence[int], k: int) -> Poly:
    """Multiply by t**k."""
    return trim([0] * k + list(p)) if any(p) else []


def monomial(k: int, c: int = 1) -> Poly:
    return shift([c], k)


def binomial_power(n: int) -> Poly:
    """Coefficients of (1 + t)**n."""
    return [comb(n, i) for i in range(n + 1)]


def divexact(p: Sequence[int], q: Sequence[int]) -> Poly:
    """Exact quotient p / q over the integers; raises if there is a remainder."""
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p)
    lead = q[-1]
    quot = [0] * max(len(p) - len(q) + 1, 0)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(q) - 1]
        if c % lead:
            raise InexactDivisionError(f"{p} is not divisible by {q}")
        c //= lead
        quot[k] = c
        for j, b in enumerate(q):
            rem[k + j] -= c * b
    if any(rem):
        raise InexactDivisionError(f"{p} is not divisible by {q}")
    return trim(quot)
