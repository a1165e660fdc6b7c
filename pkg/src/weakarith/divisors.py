"""Divisors, the power-of-two predicate and the kappa/mu/nu decomposition.

PT(x) holds iff x > 0 and every divisor d > 1 of x is even.  Deciding it needs
the divisors of x inside the positive cone, which is only tractable for the
shapes below; anything else raises UnsupportedElement.

Supported shapes (polynomial models): constants, c*m for a monomial m, and
two-term polynomials of total degree <= 2.

How completeness is argued
--------------------------
Every divisor of x in the cone also divides x over the fraction field F, so it
is ``s*G`` with ``s`` in F and ``G`` a monic product of irreducible factors of
x.  For the supported shapes the irreducible factors are found exactly: the
variables of the common monomial, then the remaining binomial ``m1 + t*m2``
with coprime monomials, which splits only as ``u**2 - r**2`` or
``u**2 - r**2 v**2`` when ``-t`` is a square in F (any other shape is linear
in some variable with a constant coefficient, hence irreducible).

In the models with halving, an element is even iff its free term is an even
integer, so divisors with free term 0 are always even and an odd divisor must
be ``d = (o/G0)*G`` with ``G0`` the (non-zero) constant of G and ``o`` an odd
integer.  The membership of d and of x/d reduces to divisibility conditions
``L | o | U`` on o (see ``CoeffDomain.odd_lower/odd_upper``), which are solved
exactly.  In Z[X] Gauss's lemma gives the finite list of divisors directly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import odd_part, v2
from .errors import OutOfCone, UnsupportedElement
from .poly import (
    INT,
    ModelDescriptor,
    PolyElem,
    coerce_field_poly,
    divides,
    field_poly,
    is_member,
    leading_exps,
    parity,
)

MAX_SHIFT_LIMIT = 64
DEFAULT_SHIFT = 6


def _fmul(x: dict, y: dict) -> dict:
    out: dict = {}
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out[e] + c1 * c2 if e in out else c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _fkey(f: dict) -> frozenset:
    return frozenset(f.items())


def _unit(model: ModelDescriptor) -> dict:
    return {model.zero_exps: model.domain.field_from_int(1)}


def _var(model: ModelDescriptor, i: int, power: int = 1) -> tuple:
    return tuple(power if j == i else 0 for j in range(model.nvars))


def is_supported(x: PolyElem) -> bool:
    if x.model is INT:
        return True
    n = len(x.terms)
    return n <= 1 or (n == 2 and x.degree <= 2)


def field_factors(x: PolyElem) -> tuple[object, list[tuple[dict, int]]]:
    """Factor a supported non-zero element over the fraction field.

    Returns ``(content, [(monic irreducible, multiplicity), ...])`` with
    ``x == content * prod(g**k)``.
    """
    model = x.model
    dom = model.domain
    if x.is_zero:
        raise OutOfCone("zero has no factorisation")
    if not is_supported(x):
        raise UnsupportedElement(
            f"{x} is outside the characterised shapes "
            "(constants, c*monomial, binomials of degree <= 2)"
        )
    fx = field_poly(x)
    lead = leading_exps(fx)
    content = fx[lead]
    one_f = dom.field_from_int(1)
    factors: dict = {}

    def push(g: dict, k: int = 1) -> None:
        key = _fkey(g)
        if key in factors:
            factors[key] = (g, factors[key][1] + k)
        else:
            factors[key] = (g, k)

    if len(fx) == 1:
        common = lead
    else:
        (other,) = [e for e in fx if e != lead]
        common = tuple(min(a, b) for a, b in zip(lead, other))
    for i, k in enumerate(common):
        if k:
            push({_var(model, i): one_f}, k)

    if len(fx) == 2:
        m1 = tuple(a - b for a, b in zip(lead, common))
        m2 = tuple(a - b for a, b in zip(other, common))
        t = fx[other] / content
        h = {m1: one_f, m2: t}
        split = None
        squares1 = [i for i, k in enumerate(m1) if k]
        squares2 = [i for i, k in enumerate(m2) if k]
        if len(squares1) == 1 and m1[squares1[0]] == 2:
            u = squares1[0]
            if not any(m2):
                r = dom.field_sqrt(-t)
                if r is not None:
                    split = [
                        {_var(model, u): one_f, m2: -r},
                        {_var(model, u): one_f, m2: r},
                    ]
            elif len(squares2) == 1 and m2[squares2[0]] == 2:
                r = dom.field_sqrt(-t)
                if r is not None:
                    w = _var(model, squares2[0])
                    split = [
                        {_var(model, u): one_f, w: -r},
                        {_var(model, u): one_f, w: r},
                    ]
        if split:
            for g in split:
                push(g)
        else:
            push(h)
    return content, list(factors.values())


def _families(x: PolyElem):
    """Yield (G, H) with x == content * G * H over every monic factor product G."""
    model = x.model
    content, factors = field_factors(x)
    ranges = [range(k + 1) for _, k in factors]
    for choice in itertools.product(*ranges):
        g = _unit(model)
        h = _unit(model)
        for (f, k), j in zip(factors, choice):
            for _ in range(j):
                g = _fmul(g, f)
            for _ in range(k - j):
                h = _fmul(h, f)
        yield content, g, h


def _smallest_prime(n: int) -> int:
    p = 3 if n % 2 else 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 2
    return n


@dataclass(frozen=True)
class _OddSolution:
    """Constraints ``lower | o | upper`` (upper == 0: unbounded) and sign of o."""

    lower: int
    upper: int
    sign: int


def _odd_constraints(x: PolyElem, content, g: dict, h: dict) -> _OddSolution | None:
    model = x.model
    dom = model.domain
    zero = model.zero_exps
    g0 = g.get(zero)
    x0 = dom.as_int(x.free_term)
    lower = 1
    upper = odd_part(x0)
    for e, c in g.items():
        if e != zero:
            lower = math.lcm(lower, dom.odd_lower(c / g0))
    scale = g0 * content
    for e, c in h.items():
        if e == zero:
            continue
        u = dom.odd_upper(scale * c)
        if u is None:
            return None
        upper = math.gcd(upper, u)
    sign = dom.field_sign(g0) if len(g) > 1 else 1
    return _OddSolution(lower, upper, sign)


def _odd_member(x: PolyElem, g: dict, o: int) -> PolyElem | None:
    model = x.model
    g0 = g[model.zero_exps]
    ratio = model.domain.field_from_int(o) / g0 if len(g) > 1 else None
    if ratio is None:
        d = PolyElem.constant(model, o)
    else:
        d = coerce_field_poly(model, {e: ratio * c for e, c in g.items()})
    if d is None or not is_member(d) or divides(d, x) is None:
        return None
    return d


def odd_divisor(x: PolyElem) -> PolyElem | None:
    """An odd divisor d > 1 of x (models with halving), or None if none exists."""
    model = x.model
    if model is INT:
        n = x.to_int()
        return PolyElem.constant(model, _smallest_prime(odd_part(n))) if odd_part(n) > 1 else None
    zero = model.zero_exps
    for content, g, h in _families(x):
        if zero not in g:
            continue  # free term 0: every such divisor is even
        sol = _odd_constraints(x, content, g, h)
        if sol is None:
            continue
        if len(g) == 1:  # constant divisors: odd o >= 3 with o | upper
            if sol.upper == 0:
                o = 3
            elif sol.upper > 1:
                o = _smallest_prime(sol.upper)
            else:
                continue
        else:
            if sol.upper and sol.upper % sol.lower:
                continue
            o = sol.sign * sol.lower
        d = _odd_member(x, g, o)
        if d is None:  # the constraint solution is exact; this is a bug guard
            raise AssertionError(f"odd divisor construction failed for {x}")
        return d
    return None


def non_even_divisor(x: PolyElem) -> PolyElem | None:
    """A divisor d > 1 of x that is not even, or None if every such divisor is even."""
    if x.sign() <= 0:
        raise OutOfCone(f"{x} is not positive")
    if x.model.has_half:
        return odd_divisor(x)
    for d in divisors_gt1(x):
        if not parity(d).is_even:
            return d
    return None


def pt_check(x: PolyElem) -> bool:
    """PT(x): x > 0 and every divisor of x greater than 1 is even."""
    if not is_member(x) or x.is_zero:
        raise OutOfCone(f"PT is only defined for positive members, got {x}")
    return non_even_divisor(x) is None


def is_pt(x: PolyElem) -> bool:
    """PT as a predicate on the whole cone (false at 0)."""
    return not x.is_zero and pt_check(x)


def _odd_divisors(n: int) -> list[int]:
    n = odd_part(n)
    return [k for k in range(1, n + 1, 2) if n % k == 0] if n else []


def _int_divisors_gt1(n: int) -> list[int]:
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return [k for k in small + large[::-1] if k > 1]


def _primitive(model: ModelDescriptor, g: dict) -> PolyElem:
    """Integer primitive polynomial with positive leading coefficient, proportional to g."""
    coeffs = [Fraction(c) for c in g.values()]
    den = math.lcm(*(c.denominator for c in coeffs))
    nums = [int(c * den) for c in coeffs]
    gcd = math.gcd(*nums)
    lead = g[leading_exps(g)]
    if lead < 0:
        gcd = -gcd
    return PolyElem(model, {e: int(Fraction(c) * den) // gcd for e, c in g.items()})


def _gauss_divisors(x: PolyElem) -> list[PolyElem]:
    model = x.model
    content, factors = field_factors(x)
    prims = [(_primitive(model, g), k) for g, k in factors]
    rest = PolyElem.constant(model, 1)
    for p, k in prims:
        for _ in range(k):
            rest = rest * p
    c = divides(rest, x)
    cont = c.to_int()
    out = []
    for choice in itertools.product(*(range(k + 1) for _, k in prims)):
        base = PolyElem.constant(model, 1)
        for (p, _), j in zip(prims, choice):
            for _ in range(j):
                base = base * p
        for e in [1] + _int_divisors_gt1(cont):
            d = base.scale(e)
            if d != 1:
                out.append(d)
    return out


def divisors_gt1(x: PolyElem, max_shift: int = DEFAULT_SHIFT) -> list[PolyElem]:
    """Representative divisors d > 1 of x.

    INT and Z[X]: the complete finite list.  Models with halving: each divisor
    family ``s*G`` is listed through scalings ``2**k * o * t`` with
    ``|k| <= max_shift``, ``t`` in {1, content of x} and ``o`` over the odd
    solutions of the family's membership constraints (a few representatives
    when they are unbounded).  Whenever x has an odd divisor, one is listed.
    """
    if not 0 <= max_shift <= MAX_SHIFT_LIMIT:
        raise ValueError(f"max_shift must lie in [0, {MAX_SHIFT_LIMIT}]")
    model = x.model
    if x.is_zero:
        raise OutOfCone("divisors of 0 are not enumerated (PT requires n > 0)")
    if x.sign() < 0:
        raise OutOfCone(f"{x} is not a member")
    if model is INT:
        return [PolyElem.constant(model, k) for k in _int_divisors_gt1(x.to_int())]
    if not model.has_half:
        return _gauss_divisors(x)

    dom = model.domain
    zero = model.zero_exps
    found: dict = {}

    def consider(scalar, g: dict) -> None:
        d = coerce_field_poly(model, {e: scalar * c for e, c in g.items()})
        if d is None or d in found or not is_member(d) or d.is_zero or d == 1:
            return
        if divides(d, x) is not None:
            found[d] = None

    for content, g, h in _families(x):
        if zero in g:
            sol = _odd_constraints(x, content, g, h)
            if sol is None:
                continue
            if sol.upper:
                odds = [o for o in _odd_divisors(sol.upper) if o % sol.lower == 0]
            else:
                odds = [sol.lower * k for k in (1, 3, 5, 7)]
            g0 = g[zero]
            for o in odds:
                base = dom.field_from_int(sol.sign * o) / g0
                for k in range(max_shift + 1):
                    consider(base * dom.field_from_int(2**k), g)
        else:
            for t in (dom.field_from_int(1), content):
                for o in (1, 3):
                    for k in range(-max_shift, max_shift + 1):
                        shift = Fraction(2) ** k
                        consider(t * dom.field_from_int(o) * (dom.field_from_int(0) + shift), g)
    odd = odd_divisor(x)
    if odd is not None and odd not in found:
        found[odd] = None
    return sorted(found, key=_display_key)


def _display_key(d: PolyElem):
    if d.is_constant:
        return (0, d.to_int(), "")
    from .terms import render

    return (d.degree, len(d.terms), render(d))


@dataclass(frozen=True)
class KmnDecomposition:
    kappa: PolyElem
    mu: PolyElem
    nu: PolyElem


@dataclass(frozen=True)
class KmnNotFound:
    m: PolyElem
    n: PolyElem
    candidates: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return False


def _two_content(k: PolyElem, cap: int) -> int:
    two = PolyElem.constant(k.model, 2)
    count = 0
    while count < cap:
        q = divides(two, k)
        if q is None:
            break
        k = q
        count += 1
    return count


def kappa_mu_nu(m: PolyElem, n: PolyElem, max_shift: int = DEFAULT_SHIFT):
    """m = kappa*mu, n = kappa*nu with mu or nu odd; KmnNotFound if the search fails."""
    m._check(n)
    for v in (m, n):
        if not is_member(v) or v.is_zero:
            raise OutOfCone(f"kappa_mu_nu needs positive arguments, got {v}")
    model = m.model
    if model is INT:
        a, b = m.to_int(), n.to_int()
        kappa = 1 << min(v2(a), v2(b))
        return KmnDecomposition(
            PolyElem.constant(model, kappa),
            PolyElem.constant(model, a // kappa),
            PolyElem.constant(model, b // kappa),
        )
    candidates = [PolyElem.constant(model, 1)] + divisors_gt1(m, max_shift)
    common = [k for k in candidates if divides(k, n) is not None]
    ranked = sorted(
        enumerate(common),
        key=lambda p: (-_two_content(p[1], max_shift), -p[1].degree, p[0]),
    )
    for _, kappa in ranked:
        mu, nu = divides(kappa, m), divides(kappa, n)
        if parity(mu).is_odd or parity(nu).is_odd:
            return KmnDecomposition(kappa, mu, nu)
    return KmnNotFound(m, n, common)
