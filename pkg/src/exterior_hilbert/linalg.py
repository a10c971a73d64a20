"""Exact rank and nullspace over GF(p) and QQ.

GF(p): dense elimination on an int64 residue matrix (p < 2**31 keeps every
product below 2**62), or sparse elimination with Markowitz pivoting for large
matrices.  QQ: fraction-free Bareiss elimination for rank, Gauss-Jordan over
``Fraction`` for kernels.

Pivots are chosen column by column, taking the smallest row index, so kernels
come out identical on every run.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

DENSE_LIMIT = 4096
RATIONAL_LIMIT = 1000


class TooLargeError(ValueError):
    pass


def _echelon_mod_p(A: np.ndarray, p: int, reduced: bool) -> tuple[np.ndarray, list[int]]:
    A = np.array(A, dtype=np.int64) % p
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = A[r, c:] * inv % p
        lo = 0 if reduced else r + 1
        targets = lo + np.flatnonzero(A[lo:, c])
        targets = targets[targets != r]
        if targets.size:
            A[targets, c:] = (A[targets, c:] - np.outer(A[targets, c], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank_mod_p_dense(A: np.ndarray, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(_echelon_mod_p(A, p, reduced=False)[1])


def rank_mod_p_sparse(rows: np.ndarray, cols: np.ndarray, vals: np.ndarray, shape: tuple[int, int],
                      p: int) -> int:
    """Rank of a COO matrix mod p by sparse elimination.

    Each step takes a pivot minimizing the Markowitz cost (r-1)(c-1); ties go
    to the smallest row, then the smallest column.
    """
    matrix: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for r, c, v in zip(rows.tolist(), cols.tolist(), vals.tolist()):
        v %= p
        if v:
            matrix.setdefault(r, {})[c] = v
            col_rows.setdefault(c, set()).add(r)
    rank = 0
    while matrix:
        best = None
        for r in sorted(matrix):
            row = matrix[r]
            rlen = len(row) - 1
            for c in sorted(row):
                cost = rlen * (len(col_rows[c]) - 1)
                if best is None or cost < best[0]:
                    best = (cost, r, c)
            if best[0] == 0:
                break
        _, pr, pc = best
        prow = matrix.pop(pr)
        for c in prow:
            col_rows[c].discard(pr)
        inv = pow(prow[pc], -1, p)
        for r in sorted(col_rows[pc]):
            row = matrix[r]
            factor = row[pc] * inv % p
            for c, v in prow.items():
                new = (row.get(c, 0) - factor * v) % p
                if new:
                    if c not in row:
                        col_rows[c].add(r)
                    row[c] = new
                elif c in row:
                    del row[c]
                    col_rows[c].discard(r)
            if not row:
                del matrix[r]
        rank += 1
    return rank


def nullspace_mod_p(A: np.ndarray, p: int) -> list[np.ndarray]:
    """Basis of {v : A v = 0} over GF(p), one vector per free column."""
    A = np.asarray(A)
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return [np.eye(ncols, dtype=np.int64)[j] for j in range(ncols)]
    R, pivots = _echelon_mod_p(A, p, reduced=True)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -R[i, f] % p
        basis.append(v)
    return basis


def _integer_rows(M: list[list]) -> list[list[int]]:
    out = []
    for row in M:
        fr = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * scale) for x in fr])
    return out


def rank_rational(M: list[list]) -> int:
    """Rank over QQ by fraction-free Bareiss elimination."""
    if not M or not M[0]:
        return 0
    if max(len(M), len(M[0])) > RATIONAL_LIMIT:
        raise TooLargeError(f"rational elimination is limited to dimension {RATIONAL_LIMIT}")
    A = _integer_rows(M)
    nrows, ncols = len(A), len(A[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pr = A[r]
        a = pr[c]
        for i in range(r + 1, nrows):
            row = A[i]
            b = row[c]
            if b:
                A[i] = [(a * row[j] - b * pr[j]) // prev for j in range(ncols)]
            elif a != prev:
                A[i] = [a * x // prev for x in row]
        prev = a
        r += 1
    return r


def nullspace_rational(M: list[list]) -> list[list[Fraction]]:
    ncols = len(M[0]) if M else 0
    A = [[Fraction(x) for x in row] for row in M]
    nrows = len(A)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -A[i][f]
        basis.append(v)
    return basis
