"""Exact coefficient fields: the rationals and prime fields of odd characteristic.

Forms and matrices store bare Python values (``Fraction`` or ``int`` residues)
next to a field object that knows how to combine them.  :class:`FieldScalar`
wraps a value together with its field for callers that want operator syntax
and mode checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

DEFAULT_PRIME = 2147483647  # largest prime below 2**31


class ModeMismatchError(TypeError):
    """Operands live in different coefficient fields."""


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class RationalField:
    name = "QQ"

    @property
    def characteristic(self) -> int:
        return 0

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def __str__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported")
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def __str__(self) -> str:
        return f"GF({self.p})"


Field = Union[RationalField, PrimeField]

QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


@dataclass(frozen=True)
class FieldScalar:
    field: Field
    value: object

    @classmethod
    def of(cls, field: Field, x) -> "FieldScalar":
        return cls(field, field(x))

    def _other(self, other) -> object:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise ModeMismatchError(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldScalar(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldScalar(self.field, self.field.sub(self.value, b))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldScalar(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def inv(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldScalar(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} in {self.field}"
