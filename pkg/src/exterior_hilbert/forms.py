"""Homogeneous exterior forms and the form-file text format."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .combinatorics import check_n, degree, indices, monomial, wedge_sign
from .fields import QQ, Field, ModeMismatchError


class FormError(ValueError):
    """Invalid form data or incompatible operands."""


class FormParseError(FormError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class RepeatedIndexError(FormParseError):
    pass


class ExteriorForm:
    """A homogeneous element of the exterior algebra on ``n`` generators.

    ``terms`` maps monomial bit masks to nonzero field values.  Zero values are
    dropped on construction and keys are kept in increasing mask order.
    """

    __slots__ = ("n", "degree", "field", "_terms")

    def __init__(self, n: int, degree_: int, terms: Mapping[int, object] | None = None,
                 field: Field = QQ):
        check_n(n)
        if degree_ < 0:
            raise FormError(f"negative degree {degree_}")
        self.n = n
        self.degree = degree_
        self.field = field
        clean = {}
        for mask, value in sorted((terms or {}).items()):
            if degree(mask) != degree_ or mask >> n:
                raise FormError(f"monomial {indices(mask)} does not have degree {degree_} in n={n}")
            value = field(value)
            if value != 0:
                clean[mask] = value
        self._terms = clean

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[object, Iterable[int]]],
                   field: Field = QQ, degree_: int | None = None) -> "ExteriorForm":
        """Build from ``(coefficient, index_sequence)`` pairs.

        Index sequences may be unsorted; each term picks up the sign of the
        permutation that sorts it.  Repeated monomials accumulate.
        """
        acc: dict[int, object] = {}
        d = degree_
        for coeff, idx in terms:
            idx = tuple(idx)
            mask, sign = _normalize(idx, n)
            if d is None:
                d = len(idx)
            elif len(idx) != d:
                raise FormError(f"mixed degrees {d} and {len(idx)}")
            value = field(coeff)
            if sign < 0:
                value = field.neg(value)
            acc[mask] = field.add(acc.get(mask, field(0)), value)
        return cls(n, d if d is not None else 0, acc, field)

    @classmethod
    def monomial(cls, n: int, idx: Iterable[int], coeff=1, field: Field = QQ) -> "ExteriorForm":
        return cls.from_terms(n, [(coeff, idx)], field)

    @property
    def terms(self) -> dict[int, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, idx) -> object:
        mask = idx if isinstance(idx, int) else monomial(idx, self.n)
        return self._terms.get(mask, self.field(0))

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "ExteriorForm") -> None:
        if not isinstance(other, ExteriorForm):
            raise TypeError(f"expected ExteriorForm, got {type(other).__name__}")
        if other.field != self.field:
            raise ModeMismatchError(f"{self.field} vs {other.field}")
        if other.n != self.n:
            raise FormError(f"ambient mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other: "ExteriorForm") -> "ExteriorForm":
        self._check(other)
        if other.degree != self.degree:
            raise FormError(f"cannot add degree {self.degree} and {other.degree}")
        F = self.field
        acc = dict(self._terms)
        for mask, value in other._terms.items():
            acc[mask] = F.add(acc.get(mask, F(0)), value)
        return ExteriorForm(self.n, self.degree, acc, F)

    def __neg__(self) -> "ExteriorForm":
        return self.scale(-1)

    def __sub__(self, other: "ExteriorForm") -> "ExteriorForm":
        return self + (-other)

    def scale(self, c) -> "ExteriorForm":
        F = self.field
        c = F(c)
        return ExteriorForm(self.n, self.degree, {m: F.mul(c, v) for m, v in self._terms.items()}, F)

    def wedge(self, other: "ExteriorForm") -> "ExteriorForm":
        self._check(other)
        d = self.degree + other.degree
        F = self.field
        acc: dict[int, object] = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                s = wedge_sign(a, b)
                if s == 0:
                    continue
                v = F.mul(x, y)
                if s < 0:
                    v = F.neg(v)
                m = a | b
                acc[m] = F.add(acc.get(m, F(0)), v)
        return ExteriorForm(self.n, d, acc, F)

    def __mul__(self, other):
        if isinstance(other, ExteriorForm):
            return self.wedge(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def power(self, k: int) -> "ExteriorForm":
        result = ExteriorForm(self.n, 0, {0: 1}, self.field)
        for _ in range(k):
            result = result.wedge(self)
        return result

    def to_field(self, field: Field) -> "ExteriorForm":
        """Reduce (or lift) the coefficients into another field.

        Lifting a residue to QQ uses its representative in [0, p).
        """
        return ExteriorForm(self.n, self.degree, {m: field(v) for m, v in self._terms.items()}, field)

    def __eq__(self, other):
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return (self.n, self.degree, self.field, self._terms) == (
            other.n, other.degree, other.field, other._terms)

    def __hash__(self):
        return hash((self.n, self.degree, tuple(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"ExteriorForm(0, n={self.n}, d={self.degree})"
        parts = []
        for mask, value in self._terms.items():
            mono = "".join(f"x{i}" for i in indices(mask)) or "1"
            parts.append(f"{value}*{mono}")
        return " + ".join(parts)


def _normalize(idx: tuple[int, ...], n: int) -> tuple[int, int]:
    seen = set()
    for i in idx:
        if i < 1 or i > n:
            raise FormError(f"variable index {i} outside 1..{n}")
        if i in seen:
            raise FormError(f"repeated variable index {i}")
        seen.add(i)
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return monomial(idx), -1 if inversions & 1 else 1


def parse_form(text: str, n: int, d: int | None = None, field: Field = QQ) -> ExteriorForm:
    """Parse the form-file format: one ``c i1 ... id`` term per line.

    ``#`` starts a comment and blank lines are skipped.  Unsorted index lists
    are sign-normalized.
    """
    terms = []
    degree_ = d
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise FormParseError(lineno, f"expected integers, got {line!r}") from None
        coeff, idx = values[0], values[1:]
        if len(set(idx)) != len(idx):
            raise RepeatedIndexError(lineno, f"repeated index in {line!r}")
        for i in idx:
            if not 1 <= i <= n:
                raise FormParseError(lineno, f"index {i} outside 1..{n}")
        if degree_ is None:
            degree_ = len(idx)
        elif len(idx) != degree_:
            raise FormParseError(lineno, f"term of degree {len(idx)} in a degree {degree_} form")
        terms.append((coeff, idx))
    if degree_ is None:
        raise FormParseError(0, "empty form needs an explicit degree")
    return ExteriorForm.from_terms(n, terms, field, degree_)


def format_form(f: ExteriorForm) -> str:
    lines = []
    F = f.field
    half = F.characteristic // 2
    for mask, value in f.items():
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise FormError("rational coefficients with denominators have no text form")
            c = value.numerator
        else:
            c = value - F.characteristic if value > half else value
        lines.append(" ".join(str(x) for x in (c, *indices(mask))))
    return "\n".join(lines) + ("\n" if lines else "")
