"""Sampled axiom checking and the pinned-witness claim suite.

Universally quantified statements are instantiated over a deterministic pool
of members and evaluated with the ring operations; a check can only ever
falsify, so a passing report means "no counterexample in N instances".
"""

from __future__ import annotations

import functools
import itertools
import math
import json
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .divisors import is_pt, is_supported, kappa_mu_nu, KmnNotFound
from .errors import ArithError, UnsupportedElement
from .poly import (
    INT,
    MODELS,
    ModelDescriptor,
    PolyElem,
    divides,
    half_floor,
    is_member,
    parity,
    poly_cmp,
    poly_sub,
)
from .terms import parse_term, render

AXIOMS = (
    "ASSOC_ADD", "COMM_ADD", "ASSOC_MUL", "COMM_MUL", "DISTRIB", "ZERO", "ONE",
    "TRANS", "IRREFL", "TOTAL", "ADD_MONO", "MUL_MONO", "SUB", "DISC", "POS",
    "OE", "RF",
)
PA_MINUS = AXIOMS[:15]
PROPERTIES = (
    "L_MINUS", "CANC", "DIS_MINUS", "LOE", "DIV2", "PT_MUL", "PT_DVD", "PT_GAP",
)

# elements every pool starts with, after 0, 1, 2: known counterexamples and PT
# witnesses for the model, then the bare variables
PINNED = {
    "INT": (),
    "Z_X": ("X + 1", "X + 2", "X + 3", "X"),
    "R3_X": ("X", "sqrt3*X", "2*X"),
    "Q2_X": ("X", "sqrt2*X"),
    "DY_XYZ": ("X*Y - Z", "Y*Z - X", "X*Z - Y", "X", "Y", "Z"),
}


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    sample_count: int = 10_000
    pool_size: int = 48
    max_degree: int = 2
    max_terms: int = 3
    num_range: int = 6
    exp_range: int = 2

    def __post_init__(self):
        if self.sample_count < 1 or self.pool_size < 1:
            raise ValueError("sample_count and pool_size must be positive")
        if self.max_degree < 0 or self.max_terms < 1 or self.num_range < 1 or self.exp_range < 0:
            raise ValueError(f"invalid sampler configuration {self}")


@dataclass
class CheckReport:
    model: str
    check: str
    status: str  # "pass", "fail" or "unsupported"
    samples: int
    witness: tuple = ()
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "check": self.check,
            "status": self.status,
            "samples": self.samples,
            "witness": [render(w) for w in self.witness],
        }

    def line(self, unicode: bool = False) -> str:
        text = f"[{self.status.upper():<11}] {self.model:<7} {self.check:<28} samples={self.samples}"
        if self.witness:
            text += "  witness=(" + ", ".join(render(w, unicode) for w in self.witness) + ")"
        if self.detail:
            text += f"  {self.detail}"
        return text


def pinned_pool(model: ModelDescriptor) -> list[PolyElem]:
    base = [PolyElem.constant(model, k) for k in (0, 1, 2)]
    return base + [parse_term(s, model) for s in PINNED[model.id]]


def _random_member(model: ModelDescriptor, rng: random.Random, cfg: SamplerConfig) -> PolyElem:
    dom = model.domain
    if model is INT:
        # mix small values with wide ones so powers of two and their neighbours occur
        return PolyElem.constant(model, rng.randint(0, 1 << rng.randint(1, 24)))
    while True:
        terms = {}
        for _ in range(rng.randint(1, cfg.max_terms)):
            exps = [0] * model.nvars
            for _ in range(rng.randint(0, cfg.max_degree)):
                exps[rng.randrange(model.nvars)] += 1
            exps = tuple(exps)
            if any(exps):
                terms[exps] = dom.random(rng, cfg.num_range, cfg.exp_range)
            else:
                terms[exps] = dom.from_int(rng.randint(-cfg.num_range, cfg.num_range))
        x = PolyElem(model, terms)
        if x.sign() < 0:
            x = -x
        if is_member(x):
            return x


def sample(model: ModelDescriptor, cfg: SamplerConfig, count: int | None = None) -> list[PolyElem]:
    """Deterministic members: 0, 1, 2, the pinned witnesses, then random ones.

    Small coefficient ranges admit only so many distinct elements, so the
    result may be shorter than ``count``.
    """
    count = cfg.pool_size if count is None else count
    return list(_sample(model.id, cfg, count))


@functools.lru_cache(maxsize=64)
def _sample(model_id: str, cfg: SamplerConfig, count: int) -> tuple:
    model = MODELS[model_id]
    rng = random.Random(f"{model.id}/{cfg.seed}")
    pool = pinned_pool(model)
    seen = set(pool)
    attempts = 0
    while len(pool) < count and attempts < 5 * count:
        attempts += 1
        x = _random_member(model, rng, cfg)
        if x not in seen:
            seen.add(x)
            pool.append(x)
    return tuple(pool[:count])


# predicates: return True when the instance satisfies the statement


def _two(model):
    return PolyElem.constant(model, 2)


def _one(model):
    return PolyElem.constant(model, 1)


def _zero(model):
    return PolyElem(model)


def _lt(x, y) -> bool:
    return poly_cmp(x, y) < 0


@functools.lru_cache(maxsize=None)
def _pt(x: PolyElem) -> bool:
    return is_pt(x)


def _ax_oe(x):
    model = x.model
    if model.has_half:
        h2 = _two(model) * half_floor(x)
        return x == h2 or x == h2 + _one(model)
    return parity(x).kind != "neither"


def _ax_rf(m, n):
    model = m.model
    if m.is_zero or n.is_zero:
        # kappa = the other argument (or 0), mu/nu = 0 or 1
        if m.is_zero and n.is_zero:
            kappa, mu, nu = _zero(model), _one(model), _one(model)
        elif m.is_zero:
            kappa, mu, nu = n, _zero(model), _one(model)
        else:
            kappa, mu, nu = m, _one(model), _zero(model)
    else:
        dec = kappa_mu_nu(m, n)
        if isinstance(dec, KmnNotFound):
            return False
        kappa, mu, nu = dec.kappa, dec.mu, dec.nu
    return (
        m == kappa * mu
        and n == kappa * nu
        and (parity(mu).is_odd or parity(nu).is_odd)
    )


def _ax_sub(x, y):
    if not _lt(x, y):
        return True
    return x + poly_sub(y, x) == y


def _prop_dis_minus(a, b, c):
    if not _lt(b, a) or c.is_zero:
        return True  # c = 0: both sides of the subtraction coincide, left undefined
    return poly_sub(c * a, c * b) == c * poly_sub(a, b)


def _prop_div2(m, a, b):
    model = m.model
    odd = _two(model) * m + _one(model)
    if divides(odd, a * b) is None or not _pt(a):
        return True
    return divides(odd, b) is not None


def _prop_pt_gap(a, b):
    if not (_lt(a, b) and _lt(b, _two(a.model) * a)):
        return True
    if not _pt(a):
        return True
    return not _pt(b)


@dataclass(frozen=True)
class _Statement:
    arity: int
    holds: Callable[..., bool]
    needs_pt: bool = False


STATEMENTS: dict[str, _Statement] = {
    "ASSOC_ADD": _Statement(3, lambda x, y, z: (x + y) + z == x + (y + z)),
    "COMM_ADD": _Statement(2, lambda x, y: x + y == y + x),
    "ASSOC_MUL": _Statement(3, lambda x, y, z: (x * y) * z == x * (y * z)),
    "COMM_MUL": _Statement(2, lambda x, y: x * y == y * x),
    "DISTRIB": _Statement(3, lambda x, y, z: x * (y + z) == x * y + x * z),
    "ZERO": _Statement(1, lambda x: x + _zero(x.model) == x and (x * _zero(x.model)).is_zero),
    "ONE": _Statement(1, lambda x: x * _one(x.model) == x),
    "TRANS": _Statement(3, lambda x, y, z: not (_lt(x, y) and _lt(y, z)) or _lt(x, z)),
    "IRREFL": _Statement(1, lambda x: not _lt(x, x)),
    "TOTAL": _Statement(2, lambda x, y: _lt(x, y) or x == y or _lt(y, x)),
    "ADD_MONO": _Statement(3, lambda x, y, z: not _lt(x, y) or _lt(x + z, y + z)),
    "MUL_MONO": _Statement(
        3, lambda x, y, z: not (_lt(_zero(x.model), z) and _lt(x, y)) or _lt(x * z, y * z)
    ),
    "SUB": _Statement(2, _ax_sub),
    "DISC": _Statement(
        1,
        lambda x: _lt(_zero(x.model), _one(x.model))
        and (not _lt(_zero(x.model), x) or _lt(_one(x.model), x) or x == _one(x.model)),
    ),
    "POS": _Statement(1, lambda x: _lt(_zero(x.model), x) or x.is_zero),
    "OE": _Statement(1, _ax_oe),
    "RF": _Statement(2, _ax_rf, needs_pt=True),
    "L_MINUS": _Statement(3, lambda a, x, y: a + x != a + y or x == y),
    "CANC": _Statement(3, lambda a, x, y: a.is_zero or a * x != a * y or x == y),
    "DIS_MINUS": _Statement(3, _prop_dis_minus),
    "LOE": _Statement(2, lambda n, m: _two(n.model) * n + _one(n.model) != _two(n.model) * m),
    "DIV2": _Statement(3, _prop_div2, needs_pt=True),
    "PT_MUL": _Statement(2, lambda a, b: not (_pt(a) and _pt(b)) or _pt(a * b), needs_pt=True),
    "PT_DVD": _Statement(
        2,
        lambda a, b: not (_pt(a) and _pt(b) and _lt(a, b)) or divides(a, b) is not None,
        needs_pt=True,
    ),
    "PT_GAP": _Statement(2, _prop_pt_gap, needs_pt=True),
}


def _instances(pool: Sequence[PolyElem], pinned: Sequence[PolyElem], arity: int, rng: random.Random):
    """Every tuple of pinned elements first, then uniform random tuples from the pool."""
    yield from itertools.product(pinned, repeat=arity)
    while True:
        yield tuple(rng.choice(pool) for _ in range(arity))


def _run(model: ModelDescriptor, check: str, cfg: SamplerConfig) -> CheckReport:
    stmt = STATEMENTS[check]
    # enough distinct elements that sample_count tuples are not mostly repeats
    wanted = max(cfg.pool_size, 2 * math.ceil(cfg.sample_count ** (1 / stmt.arity)))
    pool = sample(model, cfg, wanted)
    if stmt.needs_pt:
        pool = [x for x in pool if is_supported(x)]
    in_pool = set(pool)
    pinned = [x for x in pinned_pool(model) if x in in_pool]
    rng = random.Random(f"{model.id}/{check}/{cfg.seed}")
    evaluated = skipped = 0
    budget = 20 * cfg.sample_count
    for args in _instances(pool, pinned, stmt.arity, rng):
        if evaluated >= cfg.sample_count or evaluated + skipped >= budget:
            break
        try:
            ok = stmt.holds(*args)
        except UnsupportedElement:
            skipped += 1
            continue
        evaluated += 1
        if not ok:
            return CheckReport(model.id, check, "fail", evaluated, tuple(args))
    if evaluated == 0:
        return CheckReport(model.id, check, "unsupported", 0, detail="no evaluable instance")
    detail = f"{skipped} instances outside the PT-decidable shapes skipped" if skipped else ""
    return CheckReport(model.id, check, "pass", evaluated, detail=detail)


def check_axiom(model: ModelDescriptor, axiom: str, cfg: SamplerConfig = SamplerConfig()) -> CheckReport:
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}")
    return _run(model, axiom, cfg)


def check_property(model: ModelDescriptor, prop: str, cfg: SamplerConfig = SamplerConfig()) -> CheckReport:
    if prop not in PROPERTIES:
        raise ValueError(f"unknown derived property {prop!r}")
    return _run(model, prop, cfg)


def replay(report: CheckReport) -> bool:
    """True iff the report's witness still violates its statement."""
    if report.status != "fail":
        raise ValueError("only failing reports carry a witness")
    model = MODELS[report.model]
    args = [parse_term(render(w), model) for w in report.witness]
    return not STATEMENTS[report.check].holds(*args)


def run_suite(
    model: ModelDescriptor,
    checks: Iterable[str] = AXIOMS,
    cfg: SamplerConfig = SamplerConfig(),
) -> list[CheckReport]:
    out = []
    for c in checks:
        out.append(check_axiom(model, c, cfg) if c in AXIOMS else check_property(model, c, cfg))
    return out


# pinned claims


@dataclass(frozen=True)
class Claim:
    id: str
    source: str  # which construction the claim belongs to
    model: str
    kind: str
    args: tuple
    expect: object = True


def _claim_list() -> list[Claim]:
    claims = [
        Claim(f"parity(X+{k}) = Neither", "Z[X] cone", "Z_X", "parity", (f"X + {k}",), "neither")
        for k in range(1, 6)
    ]
    claims += [
        Claim("PT(sqrt3*X)", "sqrt3 model", "R3_X", "pt", ("sqrt3*X",), True),
        Claim("sqrt3*X * sqrt3*X = 3*X^2", "sqrt3 model", "R3_X", "product", ("sqrt3*X", "sqrt3*X", "3*X^2")),
        Claim("not PT(3*X^2)", "sqrt3 model", "R3_X", "pt", ("3*X^2",), False),
        Claim("PT(X)", "sqrt3 model", "R3_X", "pt", ("X",), True),
        Claim("PT(2*X)", "sqrt3 model", "R3_X", "pt", ("2*X",), True),
        Claim("X < sqrt3*X", "sqrt3 model", "R3_X", "less", ("X", "sqrt3*X")),
        Claim("sqrt3*X < 2*X", "sqrt3 model", "R3_X", "less", ("sqrt3*X", "2*X")),
        Claim("X does not divide sqrt3*X", "sqrt3 model", "R3_X", "divides", ("X", "sqrt3*X"), False),
        Claim("[(X+1)/2] = 1/2*X", "sqrt3 model", "R3_X", "half", ("X + 1", "1/2*X")),
        Claim("X+1 is odd", "sqrt3 model", "R3_X", "parity", ("X + 1",), "odd"),
        Claim("kappa/mu/nu fail at (X, sqrt2*X)", "sqrt2 model", "Q2_X", "kmn", ("X", "sqrt2*X"), False),
    ]
    claims += [
        Claim(f"not PT({s})", "sqrt2 model", "Q2_X", "pt", (s,), False)
        for s in ("X", "sqrt2*X", "X^2", "X + 2")
    ]
    for s in ("X*Y - Z", "Y*Z - X", "X*Z - Y"):
        claims.append(Claim(f"{s} > 0", "trivariate dyadic model", "DY_XYZ", "less", ("0", s)))
        claims.append(Claim(f"PT({s})", "trivariate dyadic model", "DY_XYZ", "pt", (s,), True))
    claims.append(Claim("PT(1)", "numerals", "INT", "pt", ("1",), True))
    return claims


CLAIMS = _claim_list()


def _evaluate_claim(claim: Claim) -> tuple[bool, str]:
    model = MODELS[claim.model]
    args = [parse_term(s, model) for s in claim.args]
    kind = claim.kind
    if kind == "pt":
        got = is_pt(args[0])
        return got == claim.expect, f"PT={got}"
    if kind == "parity":
        got = parity(args[0])
        return got.kind == claim.expect, f"parity={got}"
    if kind == "less":
        return _lt(args[0], args[1]), ""
    if kind == "divides":
        got = divides(args[0], args[1])
        return (got is not None) == claim.expect, f"cofactor={got}"
    if kind == "product":
        return args[0] * args[1] == args[2], ""
    if kind == "half":
        got = half_floor(args[0])
        return got == args[1], f"half={got}"
    if kind == "kmn":
        got = kappa_mu_nu(args[0], args[1])
        found = not isinstance(got, KmnNotFound)
        note = f"{len(got.candidates)} common-divisor candidates tried" if not found else str(got)
        return found == claim.expect, note
    raise ValueError(f"unknown claim kind {kind!r}")


def verify_claims(model_id: str | None = None) -> list[CheckReport]:
    reports = []
    for claim in CLAIMS:
        if model_id is not None and claim.model != model_id:
            continue
        model = MODELS[claim.model]
        witness = tuple(parse_term(s, model) for s in claim.args)
        try:
            ok, note = _evaluate_claim(claim)
        except ArithError as exc:
            ok, note = False, f"error: {exc}"
        reports.append(
            CheckReport(claim.model, claim.id, "pass" if ok else "fail", 1, witness, note)
        )
    return reports


def reports_document(reports: Sequence[CheckReport]) -> list[dict]:
    return [r.to_dict() for r in reports]


def reports_to_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps(reports_document(reports), indent=2, ensure_ascii=True) + "\n"
