"""Ordered polynomial rings whose positive cones carry the models.

A model is one of five catalog entries:

========  =====  =====================  ==================  ========
id        vars   coefficients           order               halving
========  =====  =====================  ==================  ========
INT       -      Z                      integer order       yes
Z_X       X      Z                      leading coefficient no
R3_X      X      Z[1/2][sqrt3]          leading coefficient yes
Q2_X      X      Q(sqrt2)               leading coefficient yes
DY_XYZ    X Y Z  Z[1/2]                 max-lex leading     yes
========  =====  =====================  ==================  ========

In every polynomial model the free term is restricted to Z.  Members are the
non-negative elements; ``PolyElem`` itself may hold any ring element so that
intermediate differences can be formed, and ``is_member`` draws the line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import floor_half_int
from .domains import DYADIC_SQRT3, DYADICS, INTEGERS, RATIONAL_SQRT2, CoeffDomain
from .errors import DomainMismatch, OutOfCone, UnsupportedOperation

Exps = tuple  # tuple[int, ...], one slot per variable


@dataclass(frozen=True, eq=False)
class ModelDescriptor:
    id: str
    nvars: int
    var_names: tuple
    domain: CoeffDomain
    ordering: str
    has_half: bool
    has_kmn: bool
    free_term_domain: str = "Z"

    def __repr__(self) -> str:
        return f"<model {self.id}>"

    @property
    def zero_exps(self) -> Exps:
        return (0,) * self.nvars


INT = ModelDescriptor("INT", 0, (), INTEGERS, "standard-integer", True, True)
Z_X = ModelDescriptor("Z_X", 1, ("X",), INTEGERS, "univariate-leading", False, False)
R3_X = ModelDescriptor("R3_X", 1, ("X",), DYADIC_SQRT3, "univariate-leading", True, True)
Q2_X = ModelDescriptor("Q2_X", 1, ("X",), RATIONAL_SQRT2, "univariate-leading", True, True)
DY_XYZ = ModelDescriptor("DY_XYZ", 3, ("X", "Y", "Z"), DYADICS, "max-lex-leading", True, True)

MODELS = {m.id: m for m in (INT, Z_X, R3_X, Q2_X, DY_XYZ)}


def get_model(model_id: str) -> ModelDescriptor:
    try:
        return MODELS[model_id]
    except KeyError:
        raise KeyError(f"unknown model {model_id!r}; expected one of {sorted(MODELS)}") from None


def mono_key(exps: Exps):
    """Graded-lex key: total degree first, then lexicographic with X > Y > Z."""
    return (sum(exps), exps)


def leading_exps(terms: Mapping[Exps, object]) -> Exps:
    return max(terms, key=mono_key)


class PolyElem:
    """An element of a model's ambient ring, stored as {exponent tuple: coefficient}."""

    __slots__ = ("model", "terms", "_hash")

    def __init__(self, model: ModelDescriptor, terms: Mapping[Exps, object] | None = None):
        self.model = model
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def constant(cls, model: ModelDescriptor, n: int) -> PolyElem:
        return cls(model, {model.zero_exps: model.domain.from_int(n)})

    @classmethod
    def variable(cls, model: ModelDescriptor, name: str) -> PolyElem:
        idx = model.var_names.index(name)
        exps = tuple(int(i == idx) for i in range(model.nvars))
        return cls(model, {exps: model.domain.one})

    @classmethod
    def monomial(cls, model: ModelDescriptor, coeff, exps: Exps) -> PolyElem:
        return cls(model, {tuple(exps): coeff})

    def _check(self, other: PolyElem) -> None:
        if not isinstance(other, PolyElem):
            raise DomainMismatch(f"expected PolyElem, got {type(other).__name__}")
        if other.model is not self.model:
            raise DomainMismatch(f"model mismatch: {self.model.id} vs {other.model.id}")

    # ring operations (total on the ambient ring)
    def __add__(self, other: PolyElem) -> PolyElem:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                out[e] = out[e] + c
            else:
                out[e] = c
        return PolyElem(self.model, out)

    def __mul__(self, other: PolyElem) -> PolyElem:
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    out[e] = out[e] + c
                else:
                    out[e] = c
        return PolyElem(self.model, out)

    def __neg__(self) -> PolyElem:
        return PolyElem(self.model, {e: -c for e, c in self.terms.items()})

    def minus(self, other: PolyElem) -> PolyElem:
        """Ring difference, without the positivity guard of ``poly_sub``."""
        return self + (-other)

    def scale(self, c) -> PolyElem:
        return PolyElem(self.model, {e: c * v for e, v in self.terms.items()})

    def __sub__(self, other: PolyElem) -> PolyElem:
        return poly_sub(self, other)

    # order
    def sign(self) -> int:
        if not self.terms:
            return 0
        return self.model.domain.sign(self.terms[leading_exps(self.terms)])

    def __lt__(self, other: PolyElem) -> bool:
        return poly_cmp(self, other) < 0

    def __le__(self, other: PolyElem) -> bool:
        return poly_cmp(self, other) <= 0

    def __gt__(self, other: PolyElem) -> bool:
        return poly_cmp(self, other) > 0

    def __ge__(self, other: PolyElem) -> bool:
        return poly_cmp(self, other) >= 0

    # structure
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def free_term(self):
        return self.terms.get(self.model.zero_exps, self.model.domain.zero)

    @property
    def is_constant(self) -> bool:
        return all(e == self.model.zero_exps for e in self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def leading(self):
        e = leading_exps(self.terms)
        return e, self.terms[e]

    def to_int(self) -> int:
        """Integer value of a constant element."""
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        n = self.model.domain.as_int(self.free_term)
        if n is None:
            raise ValueError(f"{self} is not an integer constant")
        return n

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyElem):
            return self.model is other.model and self.terms == other.terms
        if isinstance(other, int):
            return self.is_constant and self.free_term == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.model.id, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"PolyElem({self.model.id}, {self})"

    def __str__(self) -> str:
        from .terms import render

        return render(self)


@dataclass(frozen=True)
class Parity:
    kind: str  # "even", "odd" or "neither"
    witness: PolyElem | None = None

    @property
    def is_even(self) -> bool:
        return self.kind == "even"

    @property
    def is_odd(self) -> bool:
        return self.kind == "odd"

    def __str__(self) -> str:
        if self.witness is None:
            return "Neither"
        return f"{self.kind.capitalize()}({self.witness})"


def _same_model(x: PolyElem, y: PolyElem) -> None:
    x._check(y)


def numeral(k: int, model: ModelDescriptor) -> PolyElem:
    if k < 0:
        raise OutOfCone(f"numeral {k} is negative")
    return PolyElem.constant(model, k)


def poly_arith(op: str, x: PolyElem, y: PolyElem) -> PolyElem:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_cmp(x: PolyElem, y: PolyElem) -> int:
    """-1, 0 or 1 as x is less than, equal to or greater than y."""
    _same_model(x, y)
    if x.terms == y.terms:
        return 0
    return x.minus(y).sign()


def poly_sub(x: PolyElem, y: PolyElem) -> PolyElem:
    """x - y, defined only when y < x (subtraction is partial on the cone)."""
    diff = x.minus(y)
    if diff.sign() <= 0:
        raise OutOfCone(f"{x} - {y} is not defined: subtrahend is not smaller")
    return diff


def coerce_field_poly(model: ModelDescriptor, fpoly: Mapping[Exps, object]) -> PolyElem | None:
    """Native element with the same value as a field polynomial, or None."""
    dom = model.domain
    out = {}
    for e, f in fpoly.items():
        c = dom.from_field(f)
        if c is None:
            return None
        out[e] = c
    return PolyElem(model, out)


def is_member(x, model: ModelDescriptor | None = None) -> bool:
    """True iff x is a non-negative element with integer free term.

    ``x`` may be a PolyElem or a mapping of field-valued coefficients.
    """
    if not isinstance(x, PolyElem):
        if model is None:
            raise TypeError("a model is required for raw polynomials")
        x = coerce_field_poly(model, x)
        if x is None:
            return False
    elif model is not None and x.model is not model:
        return False
    if x.model.domain.as_int(x.free_term) is None:
        return False
    return x.sign() >= 0


def require_member(x: PolyElem) -> PolyElem:
    if not is_member(x):
        raise OutOfCone(f"{x} is not a member of {x.model.id}")
    return x


def half_floor(x: PolyElem) -> PolyElem:
    model = x.model
    if not model.has_half:
        raise UnsupportedOperation(f"{model.id} has no halving operation")
    dom = model.domain
    zero = model.zero_exps
    out = {}
    for e, c in x.terms.items():
        if e == zero:
            out[e] = dom.from_int(floor_half_int(dom.as_int(c)))
        else:
            out[e] = dom.half(c)
    return PolyElem(model, out)


def two(model: ModelDescriptor) -> PolyElem:
    return PolyElem.constant(model, 2)


def one(model: ModelDescriptor) -> PolyElem:
    return PolyElem.constant(model, 1)


def parity(x: PolyElem) -> Parity:
    model = x.model
    if model.has_half:
        h = half_floor(x)
        doubled = h.scale(model.domain.from_int(2))
        if doubled == x:
            return Parity("even", h)
        return Parity("odd", h)
    # Z[X]: x = 2y needs every coefficient even; x = 2y + 1 likewise after
    # removing the free 1
    dom = model.domain
    zero = model.zero_exps
    halves = {}
    for e, c in x.terms.items():
        h = dom.half(c)
        if h is None:
            break
        halves[e] = h
    else:
        return Parity("even", PolyElem(model, halves))
    shifted = x.minus(one(model))
    halves = {}
    for e, c in shifted.terms.items():
        h = dom.half(c)
        if h is None:
            return Parity("neither")
        halves[e] = h
    y = PolyElem(model, halves)
    if x.free_term and is_member(y):
        return Parity("odd", y)
    return Parity("neither")


def field_poly(x: PolyElem) -> dict:
    to_field = x.model.domain.to_field
    return {e: to_field(c) for e, c in x.terms.items()}


def field_divmod(model: ModelDescriptor, num: dict, den: dict) -> tuple[dict, dict]:
    """Division with remainder by a single divisor under the graded-lex order."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = leading_exps(den)
    lead_c = den[lead]
    rem = dict(num)
    quot: dict = {}
    leftover: dict = {}
    while rem:
        e = leading_exps(rem)
        c = rem[e]
        if all(a >= b for a, b in zip(e, lead)):
            shift = tuple(a - b for a, b in zip(e, lead))
            factor = c / lead_c
            quot[shift] = quot[shift] + factor if shift in quot else factor
            for de, dc in den.items():
                me = tuple(a + b for a, b in zip(de, shift))
                v = rem.get(me, 0) - factor * dc
                if v:
                    rem[me] = v
                else:
                    rem.pop(me, None)
        else:
            leftover[e] = c
            del rem[e]
    return quot, leftover


def divides(d: PolyElem, x: PolyElem) -> PolyElem | None:
    """The member cofactor q with d*q == x, or None if there is none."""
    _same_model(d, x)
    if d.is_zero:
        raise ZeroDivisionError("divides: divisor is zero")
    model = x.model
    if model is INT:
        dn, xn = d.to_int(), x.to_int()
        if xn % dn:
            return None
        q = PolyElem.constant(model, xn // dn)
        return q if is_member(q) else None
    quot, rem = field_divmod(model, field_poly(x), field_poly(d))
    if rem:
        return None
    q = coerce_field_poly(model, quot)
    if q is None or not is_member(q):
        return None
    return q


def all_members(xs: Iterable[PolyElem]) -> bool:
    return all(is_member(x) for x in xs)
