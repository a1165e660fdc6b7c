from __future__ import annotations

import json

import pytest

from weakarith import lab
from weakarith.lab import (
    AXIOMS,
    CLAIMS,
    PA_MINUS,
    PROPERTIES,
    CheckReport,
    SamplerConfig,
    check_axiom,
    check_property,
    replay,
    reports_to_json,
    sample,
    verify_claims,
)
from weakarith.poly import DY_XYZ, INT, MODELS, Q2_X, R3_X, Z_X, is_member
from weakarith.terms import parse_term, render

SMALL = SamplerConfig(seed=0, sample_count=400)


def test_sample_contract():
    xs = sample(INT, SamplerConfig(seed=1), 5)
    assert [x.to_int() for x in xs[:3]] == [0, 1, 2] and len(xs) == 5
    assert parse_term("X", Z_X) in sample(Z_X, SMALL, 20)
    pool = sample(DY_XYZ, SMALL, 40)
    assert parse_term("X*Y - Z", DY_XYZ) in pool
    assert all(is_member(x) for x in pool)
    assert len(set(pool)) == len(pool)


def test_sample_deterministic():
    cfg = SamplerConfig(seed=9)
    a = [render(x) for x in sample(R3_X, cfg, 100)]
    lab._sample.cache_clear()
    assert a == [render(x) for x in sample(R3_X, cfg, 100)]
    assert a != [render(x) for x in sample(R3_X, SamplerConfig(seed=10), 100)]


def test_config_validation():
    with pytest.raises(ValueError):
        SamplerConfig(sample_count=0)


def test_unknown_tags():
    with pytest.raises(ValueError):
        check_axiom(INT, "PT_MUL")
    with pytest.raises(ValueError):
        check_property(INT, "OE")


@pytest.mark.parametrize("mid", sorted(MODELS))
def test_pa_minus_small(mid):
    for tag in PA_MINUS:
        r = check_axiom(MODELS[mid], tag, SMALL)
        assert r.passed, r.line()
        assert r.samples == SMALL.sample_count


def test_expected_failures_replay():
    cases = [
        (Z_X, "OE", ("X + 1",)),
        (Q2_X, "RF", ("X", "sqrt2*X")),
        (R3_X, "PT_MUL", ("sqrt3*X", "sqrt3*X")),
        (R3_X, "PT_DVD", ("X", "sqrt3*X")),
        (R3_X, "PT_GAP", ("X", "sqrt3*X")),
    ]
    for model, tag, witness in cases:
        r = check_axiom(model, tag, SMALL) if tag in AXIOMS else check_property(model, tag, SMALL)
        assert r.status == "fail"
        assert tuple(render(w) for w in r.witness) == witness
        assert replay(r)


def test_replay_requires_failure():
    with pytest.raises(ValueError):
        replay(check_axiom(INT, "COMM_ADD", SMALL))


def test_oe_passes_where_halving_exists():
    for model in (R3_X, Q2_X, DY_XYZ, INT):
        assert check_axiom(model, "OE", SMALL).passed


@pytest.mark.parametrize("tag", PROPERTIES)
def test_properties_hold_on_int(tag):
    assert check_property(INT, tag, SMALL).passed


def test_report_determinism_and_json():
    a = [check_axiom(Z_X, t, SMALL) for t in ("OE", "RF", "TOTAL")]
    b = [check_axiom(Z_X, t, SMALL) for t in ("OE", "RF", "TOTAL")]
    assert reports_to_json(a) == reports_to_json(b)
    doc = json.loads(reports_to_json(a))
    assert isinstance(doc, list)
    assert set(doc[0]) == {"model", "check", "status", "samples", "witness"}
    assert doc[0]["witness"] == ["X + 1"]


def test_claims_all_pass():
    reports = verify_claims()
    assert len(reports) == len(CLAIMS)
    assert all(r.passed for r in reports), [r.line() for r in reports if not r.passed]
    assert {r.model for r in verify_claims("R3_X")} == {"R3_X"}


def test_report_line():
    r = CheckReport("R3_X", "PT_MUL", "fail", 3, (parse_term("sqrt3*X", R3_X),))
    assert "√3·X" in r.line(unicode=True)
    assert "sqrt3*X" in r.line()
