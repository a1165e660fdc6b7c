"""Coefficient domains of the polynomial models.

Each domain pairs a native coefficient ring (what a member's coefficients may
be) with its fraction field (where exact division and factorisation happen).
The ``odd_lower`` / ``odd_upper`` hooks answer the only questions the divisor
search ever asks about scaling by an odd integer ``o``:

* ``odd_lower(alpha)`` -> L such that ``o*alpha`` lies in the ring iff ``L | o``
* ``odd_upper(beta)``  -> U such that ``beta/o`` lies in the ring iff ``o | U``
  (U == 0 means every odd ``o`` works, ``None`` means none does)
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .core import Q_SQRT2, Q_SQRT3, Z_HALF_SQRT3, Dyadic, QuadDomain, QuadElem, odd_part


def rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _odd_den(value: Fraction) -> int:
    return odd_part(value.denominator)


class CoeffDomain:
    name: str
    has_half: bool = True

    def from_int(self, n: int):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def as_int(self, c) -> int | None:
        """The integer value of ``c`` or None when ``c`` is not a rational integer."""
        raise NotImplementedError

    def sign(self, c) -> int:
        raise NotImplementedError

    def half(self, c):
        raise NotImplementedError

    def to_field(self, c):
        raise NotImplementedError

    def from_field(self, f):
        """Native coefficient equal to ``f``, or None if ``f`` is not in the ring."""
        raise NotImplementedError

    def field_from_int(self, n: int):
        raise NotImplementedError

    def field_sign(self, f) -> int:
        raise NotImplementedError

    def field_inv(self, f):
        raise NotImplementedError

    def field_sqrt(self, f):
        raise NotImplementedError

    def odd_lower(self, f) -> int:
        raise NotImplementedError

    def odd_upper(self, f) -> int | None:
        raise NotImplementedError

    def random(self, rng: random.Random, num_range: int, exp_range: int):
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name


class IntegerDomain(CoeffDomain):
    name = "Z"
    has_half = False

    def from_int(self, n):
        return n

    def as_int(self, c):
        return c

    def sign(self, c):
        return (c > 0) - (c < 0)

    def half(self, c):
        if c % 2:
            return None
        return c // 2

    def to_field(self, c):
        return Fraction(c)

    def from_field(self, f):
        f = Fraction(f)
        return f.numerator if f.denominator == 1 else None

    def field_from_int(self, n):
        return Fraction(n)

    def field_sign(self, f):
        return (f > 0) - (f < 0)

    def field_inv(self, f):
        return 1 / Fraction(f)

    def field_sqrt(self, f):
        return rational_sqrt(Fraction(f))

    def odd_lower(self, f):
        return Fraction(f).denominator

    def odd_upper(self, f):
        f = Fraction(f)
        if f.denominator != 1:
            return None
        return abs(f.numerator)

    def random(self, rng, num_range, exp_range):
        return rng.randint(-num_range, num_range)


class DyadicDomain(IntegerDomain):
    name = "Z[1/2]"
    has_half = True

    def from_int(self, n):
        return Dyadic(n)

    def as_int(self, c):
        return c.num if c.exp == 0 else None

    def sign(self, c):
        return c.sign()

    def half(self, c):
        return c.half()

    def to_field(self, c):
        return c.to_fraction()

    def from_field(self, f):
        f = Fraction(f)
        if not Dyadic.is_dyadic(f):
            return None
        return Dyadic.from_fraction(f)

    def odd_lower(self, f):
        return _odd_den(Fraction(f))

    def odd_upper(self, f):
        f = Fraction(f)
        if _odd_den(f) != 1:
            return None
        return odd_part(f.numerator)

    def random(self, rng, num_range, exp_range):
        return Dyadic(rng.randint(-num_range, num_range), rng.randint(0, exp_range))


class QuadCoeffDomain(CoeffDomain):
    """Z[1/2][sqrt3] (dyadic components) or Q(sqrt2) (rational components)."""

    def __init__(self, ring: QuadDomain, field: QuadDomain, name: str):
        self.ring = ring
        self.field = field
        self.name = name

    def from_int(self, n):
        return self.ring(n, 0)

    def as_int(self, c):
        if c.b != 0:
            return None
        a = c.a
        if isinstance(a, Dyadic):
            return a.num if a.exp == 0 else None
        return a.numerator if a.denominator == 1 else None

    def sign(self, c):
        return c.sign()

    def half(self, c):
        if self.ring.rational:
            return QuadElem(c.a / 2, c.b / 2, self.ring)
        return QuadElem(c.a.half(), c.b.half(), self.ring)

    def to_field(self, c):
        if self.ring is self.field:
            return c
        return QuadElem(c.a.to_fraction(), c.b.to_fraction(), self.field)

    def from_field(self, f):
        if not isinstance(f, QuadElem):
            f = self.field(f, 0)
        if self.ring is self.field:
            return f
        if not (Dyadic.is_dyadic(f.a) and Dyadic.is_dyadic(f.b)):
            return None
        return QuadElem(Dyadic.from_fraction(f.a), Dyadic.from_fraction(f.b), self.ring)

    def field_from_int(self, n):
        return self.field(n, 0)

    def field_sign(self, f):
        return f.sign()

    def field_inv(self, f):
        return f.inverse()

    def field_sqrt(self, f):
        return quad_sqrt(f)

    def odd_lower(self, f):
        if self.ring.rational:
            return 1
        return math.lcm(_odd_den(f.a), _odd_den(f.b))

    def odd_upper(self, f):
        if self.ring.rational:
            return 0
        if _odd_den(f.a) != 1 or _odd_den(f.b) != 1:
            return None
        return math.gcd(odd_part(f.a.numerator), odd_part(f.b.numerator))

    def random(self, rng, num_range, exp_range):
        if self.ring.rational:
            dens = (1, 1, 2, 3, 5)
            a = Fraction(rng.randint(-num_range, num_range), rng.choice(dens))
            b = Fraction(rng.randint(-num_range, num_range), rng.choice(dens))
            return self.ring(a, b)
        a = Dyadic(rng.randint(-num_range, num_range), rng.randint(0, exp_range))
        b = Dyadic(rng.randint(-num_range, num_range), rng.randint(0, exp_range))
        return self.ring(a, b)


def quad_sqrt(t: QuadElem) -> QuadElem | None:
    """Square root of ``t`` inside Q(sqrt d), or None if it has none there."""
    dom, d = t.domain, t.domain.d
    p, q = Fraction(t.a), Fraction(t.b)
    if q == 0:
        r = rational_sqrt(p)
        if r is not None:
            return dom(r, 0)
        r = rational_sqrt(p / d)
        return dom(0, r) if r is not None else None
    n = rational_sqrt(p * p - d * q * q)
    if n is None:
        return None
    for a2 in ((p + n) / 2, (p - n) / 2):
        a = rational_sqrt(a2)
        if a:
            root = dom(a, q / (2 * a))
            if root * root == t:
                return root
    return None


INTEGERS = IntegerDomain()
DYADICS = DyadicDomain()
DYADIC_SQRT3 = QuadCoeffDomain(Z_HALF_SQRT3, Q_SQRT3, "Z[1/2][sqrt3]")
RATIONAL_SQRT2 = QuadCoeffDomain(Q_SQRT2, Q_SQRT2, "Q(sqrt2)")
