from __future__ import annotations

import itertools

import pytest

from weakarith.divisors import (
    KmnDecomposition,
    KmnNotFound,
    divisors_gt1,
    is_pt,
    is_supported,
    kappa_mu_nu,
    non_even_divisor,
    pt_check,
)
from weakarith.errors import OutOfCone, UnsupportedElement
from weakarith.lab import SamplerConfig, sample
from weakarith.poly import DY_XYZ, INT, MODELS, Q2_X, R3_X, Z_X, PolyElem, divides, is_member, parity, poly_cmp
from weakarith.terms import parse_element, parse_term


def t(src, model):
    return parse_term(src, model)


def ints(model, xs):
    return [PolyElem.constant(model, k) for k in xs]


def test_int_divisors():
    assert divisors_gt1(t("12", INT)) == ints(INT, [2, 3, 4, 6, 12])
    assert divisors_gt1(t("1", INT)) == []


@pytest.mark.parametrize("n", range(1, 400))
def test_int_divisors_brute_force(n):
    want = [d for d in range(2, n + 1) if n % d == 0]
    assert [d.to_int() for d in divisors_gt1(PolyElem.constant(INT, n))] == want


def test_int_pt_small():
    assert pt_check(t("1", INT))
    assert pt_check(t("64", INT))
    assert not pt_check(t("12", INT))
    with pytest.raises(OutOfCone):
        pt_check(t("0", INT))


def test_pinned_pt_witnesses():
    assert pt_check(t("sqrt3*X", R3_X))
    assert not pt_check(t("3*X^2", R3_X))
    assert non_even_divisor(t("3*X^2", R3_X)) == t("3", R3_X)
    assert pt_check(t("X", R3_X)) and pt_check(t("2*X", R3_X))
    for s in ("X*Y - Z", "Y*Z - X", "X*Z - Y"):
        assert pt_check(t(s, DY_XYZ))
    for s in ("X", "sqrt2*X", "X^2", "X + 2"):
        assert not pt_check(t(s, Q2_X))


@pytest.mark.parametrize(
    "mid,src",
    [("R3_X", "sqrt3*X"), ("DY_XYZ", "X*Y - Z"), ("R3_X", "2*X"), ("DY_XYZ", "Y*Z - X")],
)
def test_divisors_of_pt_elements_are_even(mid, src):
    x = t(src, MODELS[mid])
    ds = divisors_gt1(x)
    assert ds
    for d in ds:
        assert divides(d, x) is not None
        assert parity(d).is_even


def test_unsupported_shape_refused():
    with pytest.raises(UnsupportedElement):
        pt_check(t("X^3 + X + 1", R3_X))
    assert not is_supported(t("X^3 + X + 1", R3_X))


def _z_x_brute(x, bound=6):
    """Every d > 1 in Z[X] with small coefficients and degree <= deg(x) dividing x."""
    one = PolyElem.constant(Z_X, 1)
    out = set()
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=x.degree + 1):
        d = PolyElem(Z_X, {(i,): c for i, c in enumerate(coeffs)})
        if d.is_zero or not is_member(d) or d == one:
            continue
        if divides(d, x) is not None:
            out.add(d)
    return out


@pytest.mark.parametrize("src", ["X + 1", "2*X", "X^2 + X", "X^2 - 1", "4*X + 6", "3*X^2 + 6", "6"])
def test_z_x_divisors_match_brute_force(src):
    x = t(src, Z_X)
    listed = set(divisors_gt1(x))
    small = {d for d in listed if all(abs(c) <= 6 for c in d.terms.values())}
    assert small == _z_x_brute(x)
    for d in listed:
        assert divides(d, x) is not None


@pytest.mark.parametrize("mid", ["R3_X", "Q2_X", "DY_XYZ"])
def test_pt_soundness_against_pool(mid):
    """PT(x) must exclude every odd divisor > 1 found by brute search over a pool."""
    model = MODELS[mid]
    pool = [x for x in sample(model, SamplerConfig(seed=3), 150) if is_supported(x) and not x.is_zero]
    one = PolyElem.constant(model, 1)
    odd_pool = [d for d in pool if parity(d).is_odd and poly_cmp(d, one) > 0]
    odd_pool += [PolyElem.constant(model, k) for k in (3, 5, 7)]
    for x in pool[:80]:
        verdict = pt_check(x)
        witness = non_even_divisor(x)
        assert verdict == (witness is None)
        if witness is not None:
            assert divides(witness, x) is not None and not parity(witness).is_even
        else:
            assert all(divides(d, x) is None for d in odd_pool), x


@pytest.mark.parametrize("mid", ["R3_X", "Q2_X", "DY_XYZ"])
def test_listed_divisors_verify(mid):
    model = MODELS[mid]
    pool = [x for x in sample(model, SamplerConfig(seed=5), 80) if is_supported(x) and not x.is_zero]
    for x in pool[:40]:
        for d in divisors_gt1(x):
            assert poly_cmp(d, PolyElem.constant(model, 1)) > 0
            assert divides(d, x) is not None


def test_max_shift_bounds():
    with pytest.raises(ValueError):
        divisors_gt1(t("X", R3_X), max_shift=65)


def test_kmn_examples():
    got = kappa_mu_nu(t("12", INT), t("8", INT))
    assert isinstance(got, KmnDecomposition)
    assert [v.to_int() for v in (got.kappa, got.mu, got.nu)] == [4, 3, 2]
    got = kappa_mu_nu(t("4", INT), t("4", INT))
    assert [v.to_int() for v in (got.kappa, got.mu, got.nu)] == [4, 1, 1]
    got = kappa_mu_nu(t("X", Q2_X), t("sqrt2*X", Q2_X))
    assert isinstance(got, KmnNotFound) and not got
    with pytest.raises(OutOfCone):
        kappa_mu_nu(t("0", INT), t("3", INT))


@pytest.mark.parametrize("mid", ["R3_X", "DY_XYZ"])
def test_kmn_results_are_exact(mid):
    model = MODELS[mid]
    pool = [x for x in sample(model, SamplerConfig(seed=11), 30) if is_supported(x) and not x.is_zero]
    for m, n in itertools.product(pool[:12], repeat=2):
        got = kappa_mu_nu(m, n)
        if got:
            assert got.kappa * got.mu == m and got.kappa * got.nu == n
            assert parity(got.mu).is_odd or parity(got.nu).is_odd


def test_is_pt_at_zero():
    assert not is_pt(parse_element("0", R3_X))
