"""Matrices of the multiplication maps  a -> f a  from E_m to E_{m+d}.

Columns are indexed by the degree-m monomials x_J in colex order.  Rows are
indexed either by the degree-(m+d) monomials (standard basis) or by the index
sets I of size n-m-d standing for the signed complements sigma(I) xhat_I (hat
basis).  In the hat basis the (I, J) entry is sigma(K, J, I) * alpha_K where
K is the complement of I u J and alpha_K the coefficient of x_K in f.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb

import numpy as np

from . import linalg
from .combinatorics import (full_mask, rank_array, subset_array, subsets,
                            wedge_sign_array)
from .fields import PrimeField
from .forms import ExteriorForm

COLUMN_BLOCK = 2048


class Basis(str, enum.Enum):
    STANDARD = "standard"
    HAT = "hat"


class MiddleClass(str, enum.Enum):
    SYMMETRIC = "symmetric"
    SKEW_SYMMETRIC = "skew-symmetric"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class MultMapMatrix:
    """Sparse (COO) matrix of  x_J -> f x_J  for source degree ``m``."""

    f: ExteriorForm
    m: int
    basis: Basis
    rows: np.ndarray
    cols: np.ndarray
    values: list
    shape: tuple[int, int]
    _rank: int | None = dc_field(default=None, repr=False)

    @property
    def field(self):
        return self.f.field

    def to_dense(self):
        nrows, ncols = self.shape
        F = self.field
        if isinstance(F, PrimeField):
            A = np.zeros(self.shape, dtype=np.int64)
            A[self.rows, self.cols] = np.asarray(self.values, dtype=np.int64)
            return A
        A = [[Fraction(0)] * ncols for _ in range(nrows)]
        for r, c, v in zip(self.rows.tolist(), self.cols.tolist(), self.values):
            A[r][c] = v
        return A

    def entry(self, r: int, c: int):
        hit = np.flatnonzero((self.rows == r) & (self.cols == c))
        return self.values[hit[0]] if hit.size else self.field(0)

    def rank(self, dense_limit: int = linalg.DENSE_LIMIT) -> int:
        if self._rank is None:
            self._rank = _rank(self, dense_limit)
        return self._rank


def _rank(M: MultMapMatrix, dense_limit: int) -> int:
    if len(M.values) == 0:
        return 0
    F = M.field
    if isinstance(F, PrimeField):
        if max(M.shape) <= dense_limit:
            return linalg.rank_mod_p_dense(M.to_dense(), F.p)
        return linalg.rank_mod_p_sparse(M.rows, M.cols, np.asarray(M.values, dtype=np.int64),
                                        M.shape, F.p)
    return linalg.rank_rational(M.to_dense())


def build_matrix(f: ExteriorForm, m: int, basis: Basis | str = Basis.STANDARD) -> MultMapMatrix:
    basis = Basis(basis)
    n, d = f.n, f.degree
    if m < 0 or m + d > n:
        raise ValueError(f"source degree {m} invalid for n={n}, d={d}")
    target_size = comb(n, m + d)
    shape = (target_size, comb(n, m))
    if f.is_zero:
        return MultMapMatrix(f, m, basis, np.zeros(0, np.int64), np.zeros(0, np.int64), [], shape)

    K = np.array(list(f.terms), dtype=np.int64)
    alpha = list(f.terms.values())
    J_all = subset_array(n, m)
    full = full_mask(n)
    row_parts, col_parts, term_parts, sign_parts = [], [], [], []
    for start in range(0, len(J_all), COLUMN_BLOCK):
        J = J_all[start:start + COLUMN_BLOCK]
        sign = wedge_sign_array(K[:, None], J[None, :], n)
        t_idx, c_idx = np.nonzero(sign)
        union = K[t_idx] | J[c_idx]
        s = sign[t_idx, c_idx]
        if basis is Basis.STANDARD:
            r_idx = rank_array(union, n)
        else:
            I = full & ~union
            s = s * wedge_sign_array(union, I, n)
            r_idx = rank_array(I, n)
        row_parts.append(r_idx)
        col_parts.append(c_idx + start)
        term_parts.append(t_idx)
        sign_parts.append(s)
    rows = np.concatenate(row_parts)
    cols = np.concatenate(col_parts)
    t_idx = np.concatenate(term_parts)
    signs = np.concatenate(sign_parts)
    order = np.lexsort((rows, cols))
    rows, cols, t_idx, signs = rows[order], cols[order], t_idx[order], signs[order]

    F = f.field
    if isinstance(F, PrimeField):
        coeff = np.array(alpha, dtype=np.int64)
        values = (signs * coeff[t_idx]) % F.p
        values = values.tolist()
    else:
        values = [alpha[t] if s > 0 else -alpha[t] for t, s in zip(t_idx.tolist(), signs.tolist())]
    return MultMapMatrix(f, m, basis, rows, cols, values, shape)


def rank(f: ExteriorForm, m: int, basis: Basis | str = Basis.STANDARD) -> int:
    """Rank of  .f : E_m -> E_{m+d};  0 when the source or target is empty."""
    if m < 0 or m + f.degree > f.n:
        return 0
    return build_matrix(f, m, basis).rank()


def kernel_basis(f: ExteriorForm, m: int) -> list[ExteriorForm]:
    """Basis of the degree-m annihilator  {g in E_m : f g = 0}."""
    n, F = f.n, f.field
    sources = subsets(n, m)
    if m + f.degree > n:
        return [ExteriorForm(n, m, {J: 1}, F) for J in sources]
    M = build_matrix(f, m)
    if isinstance(F, PrimeField):
        vectors = [v.tolist() for v in linalg.nullspace_mod_p(M.to_dense(), F.p)]
    else:
        vectors = linalg.nullspace_rational(M.to_dense())
    return [ExteriorForm(n, m, {J: x for J, x in zip(sources, v) if x}, F) for v in vectors]


def middle_map_class(f: ExteriorForm) -> MiddleClass:
    """Symmetry type of the hat-basis matrix of  .f : E_{(n-d)/2} -> E_{(n+d)/2}.

    The classification is checked against the matrix itself; a mismatch
    raises ``AssertionError``.
    """
    n, d = f.n, f.degree
    if (n - d) % 2:
        return MiddleClass.NOT_APPLICABLE
    half = (n - d) // 2
    expected = MiddleClass.SYMMETRIC if half % 2 == 0 else MiddleClass.SKEW_SYMMETRIC
    M = build_matrix(f, half, Basis.HAT)
    sign = 1 if expected is MiddleClass.SYMMETRIC else -1
    if not transpose_relation_holds(M, M, sign):
        raise AssertionError(f"middle map of n={n}, d={d} is not {expected.value}")
    return expected


def transpose_relation_holds(M: MultMapMatrix, N: MultMapMatrix, sign: int) -> bool:
    """True iff N == sign * M^T entrywise."""
    if N.shape != M.shape[::-1]:
        return False
    F = M.field
    a = {(c, r): (v if sign > 0 else F.neg(v))
         for r, c, v in zip(M.rows.tolist(), M.cols.tolist(), M.values)}
    b = {(r, c): v for r, c, v in zip(N.rows.tolist(), N.cols.tolist(), N.values)}
    return a == b


def duality_sign(n: int, d: int, m: int) -> int:
    return -1 if (m * (n - m - d)) % 2 else 1
