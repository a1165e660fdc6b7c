from __future__ import annotations

import random
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weakarith.core import (
    Q_SQRT2,
    Z_HALF_SQRT3,
    Dyadic,
    dyadic_arith,
    dyadic_normalize,
    floor_half_int,
    odd_part,
    quad_arith,
    quad_sign,
    v2,
)
from weakarith.errors import DomainMismatch, MalformedInput

dyadics = st.builds(Dyadic, st.integers(-10**6, 10**6), st.integers(0, 12))


def _rand_dyadic(rng: random.Random) -> Dyadic:
    return Dyadic(rng.randint(-200, 200), rng.randint(0, 6))


def _rand_quad(rng: random.Random, dom):
    if dom.rational:
        return dom(Fraction(rng.randint(-60, 60), rng.randint(1, 9)), Fraction(rng.randint(-60, 60), rng.randint(1, 9)))
    return dom(_rand_dyadic(rng), _rand_dyadic(rng))


def test_v2_and_odd_part():
    assert [v2(n) for n in (1, 2, 12, 64, 96)] == [0, 1, 2, 6, 5]
    assert odd_part(96) == 3
    assert odd_part(-12) == 3
    with pytest.raises(ValueError):
        v2(0)


@pytest.mark.parametrize("num,exp,want", [(4, 2, (1, 0)), (6, 1, (3, 0)), (5, 3, (5, 3)), (0, 7, (0, 0))])
def test_normalize(num, exp, want):
    d = dyadic_normalize(num, exp)
    assert (d.num, d.exp) == want


def test_negative_exponent_rejected():
    with pytest.raises(MalformedInput):
        Dyadic(1, -1)


def test_dyadic_examples():
    assert dyadic_arith("add", Dyadic(1, 1), Dyadic(1, 1)) == Dyadic(1)
    assert dyadic_arith("mul", Dyadic(3, 1), Dyadic(1, 2)) == Dyadic(3, 3)
    assert dyadic_arith("sub", Dyadic(1), Dyadic(3, 2)) == Dyadic(1, 2)
    assert str(Dyadic(3, 3)) == "3/8"


def test_from_fraction_rejects_non_dyadic():
    assert Dyadic.from_fraction(Fraction(5, 8)) == Dyadic(5, 3)
    with pytest.raises(MalformedInput):
        Dyadic.from_fraction(Fraction(1, 3))


@given(dyadics)
def test_normalize_idempotent(x):
    y = dyadic_normalize(x.num, x.exp)
    assert (y.num, y.exp) == (x.num, x.exp)


@given(dyadics, dyadics, st.sampled_from(["add", "sub", "mul"]))
def test_dyadic_matches_fraction(x, y, op):
    f = {"add": lambda a, b: a + b, "sub": lambda a, b: a - b, "mul": lambda a, b: a * b}[op]
    assert dyadic_arith(op, x, y).to_fraction() == f(x.to_fraction(), y.to_fraction())
    assert (x < y) == (x.to_fraction() < y.to_fraction())


@pytest.mark.parametrize("a", range(-9, 10))
def test_floor_half(a):
    assert floor_half_int(a) == Fraction(a, 2).__floor__()


def test_dyadic_ring_laws_sampled():
    rng = random.Random("dyadic-laws")
    for _ in range(10_000):
        x, y, z = (_rand_dyadic(rng) for _ in range(3))
        assert x + y == y + x and x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


@pytest.mark.parametrize("dom", [Z_HALF_SQRT3, Q_SQRT2], ids=lambda d: d.name)
def test_quad_ring_laws_sampled(dom):
    rng = random.Random(f"quad-laws/{dom.name}")
    for _ in range(10_000):
        x, y, z = (_rand_quad(rng, dom) for _ in range(3))
        assert x + y == y + x and x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_quad_examples():
    r3 = Z_HALF_SQRT3(0, 1)
    assert quad_arith("mul", r3, r3) == Z_HALF_SQRT3(3, 0)
    assert quad_arith("mul", Q_SQRT2(1, 1), Q_SQRT2(1, -1)) == Q_SQRT2(-1, 0)
    assert quad_arith("add", Z_HALF_SQRT3(Dyadic(1, 1), 1), Z_HALF_SQRT3(Dyadic(1, 1), 0)) == Z_HALF_SQRT3(1, 1)


def test_quad_domain_mismatch():
    with pytest.raises(DomainMismatch):
        quad_arith("add", Z_HALF_SQRT3(1, 1), Q_SQRT2(1, 1))


def test_quad_sign_examples():
    assert quad_sign(Z_HALF_SQRT3(0, 0)) == 0
    assert quad_sign(Z_HALF_SQRT3(-1, 1)) == 1
    assert quad_sign(Z_HALF_SQRT3(2, -1)) == 1
    assert quad_sign(Q_SQRT2(Fraction(-3, 2), 1)) == -1  # sqrt2 < 3/2


def _frac(c) -> Fraction:
    return c.to_fraction() if isinstance(c, Dyadic) else Fraction(c)


def _decimal_sign(x) -> int:
    getcontext().prec = 50
    a, b = _frac(x.a), _frac(x.b)
    val = Decimal(a.numerator) / a.denominator + Decimal(b.numerator) / b.denominator * Decimal(x.d).sqrt()
    return (val > 0) - (val < 0)


@pytest.mark.parametrize("dom", [Z_HALF_SQRT3, Q_SQRT2], ids=lambda d: d.name)
def test_quad_sign_matches_decimal_oracle(dom):
    rng = random.Random(f"quad-sign/{dom.name}")
    for _ in range(2_000):
        x = _rand_quad(rng, dom)
        s = quad_sign(x)
        assert s == _decimal_sign(x)
        assert quad_sign(-x) == -s


@pytest.mark.parametrize("dom", [Z_HALF_SQRT3, Q_SQRT2], ids=lambda d: d.name)
def test_conjugate_norm_identity(dom):
    rng = random.Random(f"norm/{dom.name}")
    for _ in range(2_000):
        x = _rand_quad(rng, dom)
        assert x * x.conj() == dom(x.a * x.a - dom.d * x.b * x.b, 0)


def test_rational_inverse():
    x = Q_SQRT2(1, 1)
    assert x * x.inverse() == Q_SQRT2(1, 0)
