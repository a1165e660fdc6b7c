"""Concrete syntax for ring elements.

Grammar (ASCII)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := nat | nat '/' nat ['^' nat] | 'sqrt2' | 'sqrt3'
            | 'X' | 'Y' | 'Z' | '(' expr ')'

``n/2^k`` is read as n / (2**k).  Expressions are evaluated over the model's
fraction field and only the final value is checked for membership.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import Q_SQRT2, Q_SQRT3, Dyadic, QuadElem
from .errors import OutOfCone, ParseError
from .poly import ModelDescriptor, PolyElem, coerce_field_poly, is_member, mono_key

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt2|sqrt3|[A-Za-z_]\w*)|(.))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("nat", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, model: ModelDescriptor):
        self.model = model
        self.dom = model.domain
        self.tokens = _tokenize(src)
        self.i = 0

    # field-polynomial helpers
    def const(self, value) -> dict:
        if isinstance(value, QuadElem):
            f = value
        else:
            f = self.dom.field_from_int(0) + Fraction(value)
        return {self.model.zero_exps: f} if f else {}

    @staticmethod
    def add(x: dict, y: dict) -> dict:
        out = dict(x)
        for e, c in y.items():
            v = out[e] + c if e in out else c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return out

    @staticmethod
    def mul(x: dict, y: dict) -> dict:
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

    # token helpers
    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            found = tok[1] or "end of input"
            raise ParseError(f"expected {want}, found {found!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> dict:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self) -> dict:
        negate = False
        if self.peek()[:2] == ("op", "-"):
            self.take()
            negate = True
        value = self.term()
        if negate:
            value = {e: -c for e, c in value.items()}
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            if op == "-":
                rhs = {e: -c for e, c in rhs.items()}
            value = self.add(value, rhs)
        return value

    def term(self) -> dict:
        value = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = self.mul(value, self.factor())
        return value

    def factor(self) -> dict:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            power = int(self.take("nat")[1])
            result = self.const(1)
            for _ in range(power):
                result = self.mul(result, base)
            return result
        return base

    def atom(self) -> dict:
        kind, text, pos = self.peek()
        if kind == "nat":
            self.take()
            num = int(text)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = int(self.take("nat")[1])
                if self.peek()[:2] == ("op", "^"):
                    self.take()
                    den = den ** int(self.take("nat")[1])
                if den == 0:
                    raise ParseError("zero denominator", pos)
                return self.const(Fraction(num, den))
            return self.const(num)
        if kind == "name":
            self.take()
            if text in ("sqrt2", "sqrt3"):
                field = Q_SQRT2 if text == "sqrt2" else Q_SQRT3
                if getattr(self.dom, "field", None) is not field:
                    raise ParseError(f"{text} is not available in model {self.model.id}", pos)
                return self.const(field(0, 1))
            if text not in self.model.var_names:
                raise ParseError(f"unknown variable {text!r} for model {self.model.id}", pos)
            idx = self.model.var_names.index(text)
            exps = tuple(int(i == idx) for i in range(self.model.nvars))
            return {exps: self.dom.field_from_int(1)}
        if (kind, text) == ("op", "("):
            self.take()
            value = self.expr()
            self.take("op", ")")
            return value
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)


def parse_raw(src: str, model: ModelDescriptor) -> dict:
    """Evaluate ``src`` to a field polynomial {exps: field coefficient}."""
    return _Parser(src, model).parse()


def parse_element(src: str, model: ModelDescriptor) -> PolyElem:
    """Parse to a ring element of the model (not necessarily non-negative)."""
    raw = parse_raw(src, model)
    x = coerce_field_poly(model, raw)
    if x is None:
        raise OutOfCone(f"{src!r}: a coefficient lies outside {model.domain.name}")
    return x


def parse_term(src: str, model: ModelDescriptor) -> PolyElem:
    """Parse and membership-check an element of the model's positive cone."""
    x = parse_element(src, model)
    if model.domain.as_int(x.free_term) is None:
        raise OutOfCone(f"{src!r}: free term {render_coeff(x.free_term)[0]} is not an integer")
    if not is_member(x):
        raise OutOfCone(f"{src!r} is negative in {model.id}")
    return x


# rendering


def _rational_str(q) -> str:
    if isinstance(q, Dyadic):
        return str(q)
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _sqrt_name(c: QuadElem) -> str:
    return f"sqrt{c.domain.d}"


def _surd(b, name: str) -> str:
    return name if b == 1 else f"{_rational_str(b)}*{name}"


def render_coeff(c) -> tuple:
    """(text, needs_parens) for a coefficient rendered as written, sign included."""
    if not isinstance(c, QuadElem):
        return _rational_str(c), False
    name = _sqrt_name(c)
    if c.b == 0:
        return _rational_str(c.a), False
    if c.a == 0:
        if c.b < 0:
            return "-" + _surd(-c.b, name), False
        return _surd(c.b, name), False
    a_pos, b_pos = c.a > 0, c.b > 0
    if a_pos and b_pos:
        return f"{_rational_str(c.a)} + {_surd(c.b, name)}", True
    if b_pos:
        return f"{_surd(c.b, name)} - {_rational_str(-c.a)}", True
    if a_pos:
        return f"{_rational_str(c.a)} - {_surd(-c.b, name)}", True
    return f"-{_rational_str(-c.a)} - {_surd(-c.b, name)}", True


def _mono_str(exps, names) -> str:
    parts = []
    for name, k in zip(names, exps):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def render(x: PolyElem, unicode: bool = False) -> str:
    if x.is_zero:
        return "0"
    dom = x.model.domain
    pieces = []
    for e in sorted(x.terms, key=mono_key, reverse=True):
        c = x.terms[e]
        negative = dom.sign(c) < 0
        if negative:
            c = -c
        text, grouped = render_coeff(c)
        mono = _mono_str(e, x.model.var_names)
        if mono:
            if c == 1:
                body = mono
            else:
                body = f"({text})*{mono}" if grouped else f"{text}*{mono}"
        else:
            body = f"({text})" if grouped and (pieces or negative) else text
        pieces.append(("-" if negative else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return to_unicode(out) if unicode else out


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def to_unicode(text: str) -> str:
    text = re.sub(r"\^(\d+)", lambda m: m.group(1).translate(_SUPERSCRIPT), text)
    text = text.replace("sqrt", "√").replace("*", "·")
    return text.replace(" - ", " − ")
