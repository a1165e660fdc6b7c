"""Exact scalar arithmetic: integers, dyadic rationals and two quadratic rings.

Nothing here touches floating point.  Signs of ``a + b*sqrt(d)`` are decided
by comparing ``a**2`` with ``d*b**2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainMismatch, MalformedInput

Rational = Union[int, Fraction]


def v2(n: int) -> int:
    """2-adic valuation of a non-zero integer."""
    if n == 0:
        raise ValueError("v2(0) is undefined")
    return (n & -n).bit_length() - 1


def odd_part(n: int) -> int:
    """|n| with every factor 2 removed; odd_part(0) == 0."""
    n = abs(n)
    if n == 0:
        return 0
    return n >> v2(n)


def floor_half_int(a: int) -> int:
    return a // 2


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class Dyadic:
    """Exact rational ``num / 2**exp`` kept in normal form (exp == 0 or num odd)."""

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if exp < 0:
            raise MalformedInput(f"negative dyadic exponent {exp}")
        if num == 0:
            exp = 0
        elif exp:
            shift = min(v2(num), exp)
            num >>= shift
            exp -= shift
        self.num = num
        self.exp = exp

    @classmethod
    def from_fraction(cls, value: Rational) -> Dyadic:
        value = Fraction(value)
        den = value.denominator
        if den & (den - 1):
            raise MalformedInput(f"{value} is not a dyadic rational")
        return cls(value.numerator, den.bit_length() - 1)

    @staticmethod
    def is_dyadic(value: Rational) -> bool:
        den = Fraction(value).denominator
        return den & (den - 1) == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    @property
    def is_integer(self) -> bool:
        return self.exp == 0

    def sign(self) -> int:
        return _sign(self.num)

    def half(self) -> Dyadic:
        if self.num == 0:
            return self
        return Dyadic(self.num, self.exp + 1)

    def _coerce(self, other) -> Dyadic:
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e1, e2 = self.exp, other.exp
        if e1 == e2:
            return Dyadic(self.num + other.num, e1)
        if e1 > e2:
            return Dyadic(self.num + (other.num << (e1 - e2)), e1)
        return Dyadic((self.num << (e2 - e1)) + other.num, e2)

    __radd__ = __add__

    def __neg__(self) -> Dyadic:
        d = object.__new__(Dyadic)
        d.num, d.exp = -self.num, self.exp
        return d

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # product of odd numerators stays odd, so the result is already normal
        # unless one side is an integer with trailing zeros
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        if isinstance(other, int):
            return self.exp == 0 and self.num == other
        if isinstance(other, Fraction):
            return self.to_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.exp == 0:
            return hash(self.num)
        return hash(self.to_fraction())

    def __lt__(self, other) -> bool:
        return (self - other).num < 0

    def __le__(self, other) -> bool:
        return (self - other).num <= 0

    def __gt__(self, other) -> bool:
        return (self - other).num > 0

    def __ge__(self, other) -> bool:
        return (self - other).num >= 0

    def __bool__(self) -> bool:
        return self.num != 0

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp})"

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"


def dyadic_normalize(num: int, exp: int) -> Dyadic:
    return Dyadic(num, exp)


def dyadic_arith(op: str, x: Dyadic, y: Dyadic) -> Dyadic:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise MalformedInput(f"unknown dyadic operation {op!r}")


@dataclass(frozen=True)
class QuadDomain:
    """A ring Q[sqrt d] restricted to dyadic or rational components."""

    name: str
    d: int
    rational: bool

    def component(self, value):
        if self.rational:
            if isinstance(value, Dyadic):
                return value.to_fraction()
            return Fraction(value)
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return Dyadic(value)
        return Dyadic.from_fraction(value)

    def __call__(self, a=0, b=0) -> QuadElem:
        return QuadElem(self.component(a), self.component(b), self)

    def __repr__(self) -> str:
        return self.name


Z_HALF_SQRT3 = QuadDomain("Z[1/2][sqrt3]", 3, rational=False)
Q_SQRT2 = QuadDomain("Q(sqrt2)", 2, rational=True)
# fraction field of Z_HALF_SQRT3; only used for exact division
Q_SQRT3 = QuadDomain("Q(sqrt3)", 3, rational=True)


class QuadElem:
    """``a + b*sqrt(d)``; components are Dyadic or Fraction per the domain."""

    __slots__ = ("a", "b", "domain")

    def __init__(self, a, b, domain: QuadDomain):
        self.a = a
        self.b = b
        self.domain = domain

    @property
    def d(self) -> int:
        return self.domain.d

    def _coerce(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.domain is not self.domain:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            return other
        if isinstance(other, (int, Fraction, Dyadic)):
            return self.domain(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a + other.a, self.b + other.b, self.domain)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.a, -self.b, self.domain)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a - other.a, self.b - other.b, self.domain)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, e = self.a, self.b, other.a, other.b
        return QuadElem(a * c + self.domain.d * (b * e), a * e + b * c, self.domain)

    __rmul__ = __mul__

    def conj(self) -> QuadElem:
        return QuadElem(self.a, -self.b, self.domain)

    def norm(self):
        """a**2 - d*b**2, an element of the component ring."""
        return self.a * self.a - self.domain.d * (self.b * self.b)

    def inverse(self) -> QuadElem:
        if not self.domain.rational:
            raise DomainMismatch(f"{self.domain} is not a field")
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadElem(self.a / n, -self.b / n, self.domain)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def sign(self) -> int:
        return quad_sign(self)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            return (
                self.domain is other.domain and self.a == other.a and self.b == other.b
            )
        if isinstance(other, (int, Fraction, Dyadic)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.domain.d))

    def __lt__(self, other) -> bool:
        return quad_sign(self - other) < 0

    def __gt__(self, other) -> bool:
        return quad_sign(self - other) > 0

    def __repr__(self) -> str:
        return f"QuadElem({self.a}, {self.b}, {self.domain})"


def quad_arith(op: str, x: QuadElem, y: QuadElem) -> QuadElem:
    if x.domain is not y.domain:
        raise DomainMismatch(f"{x.domain} vs {y.domain}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise MalformedInput(f"unknown quadratic operation {op!r}")


def quad_sign(x: QuadElem) -> int:
    """Sign of a + b*sqrt(d) as a real number: -1, 0 or 1."""
    sa, sb = _sign(x.a), _sign(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the part with the larger square wins (a**2 == d*b**2 is
    # impossible for b != 0 since d is square-free)
    if x.a * x.a > x.domain.d * (x.b * x.b):
        return sa
    return sb
