from __future__ import annotations

import json

import jsonschema
import pytest

from difflin import axioms as ax
from difflin.model import Model
from difflin.semiring import INTEGER
from difflin.terms import parse_term
from difflin.verifier import (
    FAIL, PASS, REPORT_SCHEMA, SKIPPED, CheckRecord, SuiteConfig, compare, cross_checks,
    graph_checks, mutation_checks, run_suite, seeded_pairs, spot_recheck,
)


@pytest.fixture(scope="module")
def small_cfg():
    return SuiteConfig.make("rational", {"A": 2, "B": 1}, size_cap=3, instantiations=2)


def test_report_validates_against_schema(small_cfg):
    report = run_suite(small_cfg)
    report.extend(cross_checks(small_cfg)).extend(graph_checks(small_cfg))
    report.extend(mutation_checks(small_cfg))
    jsonschema.validate(json.loads(report.dumps()), REPORT_SCHEMA)
    assert report.ok


def test_json_has_no_timings(small_cfg):
    text = run_suite(small_cfg).dumps()
    assert "wall_time" not in text


def test_same_seed_same_bytes_different_seed_different_instances():
    a = SuiteConfig.make("integer", {"A": 2, "B": 1}, size_cap=3, seed=11)
    b = SuiteConfig.make("integer", {"A": 2, "B": 1}, size_cap=3, seed=12)
    assert run_suite(a).dumps() == run_suite(a).dumps()
    assert cross_checks(a).dumps() != cross_checks(b).dumps()


def test_parallel_matches_serial(monkeypatch):
    cfg = SuiteConfig.make("rational", {"A": 1, "B": 1}, size_cap=3, tiers=["comonad", "hopf"])
    serial = run_suite(cfg).dumps()
    monkeypatch.setenv("DIFFLIN_WORKERS", "2")
    assert run_suite(cfg).dumps() == serial


def test_negative_tiers_skip_without_negatives():
    cfg = SuiteConfig.make("natural", {"A": 1}, size_cap=3, tiers=sorted(ax.NEGATIVE_TIERS))
    report = run_suite(cfg)
    assert report.checks and all(c.verdict == SKIPPED for c in report.checks)
    assert report.ok


def test_deeper_cap_over_integers():
    # cap 7 exercises three-factor tensors that barely fit at the default cap
    cfg = SuiteConfig.make("integer", {"A": 2, "B": 1}, size_cap=7)
    report = run_suite(cfg)
    assert report.summary["pass"] == report.summary["total"] == 3 * ax.TOTAL_EQUATIONS
    assert all(c.entries_checked > 10 for c in report.by_id("smendo.assoc"))


def test_spot_recheck_stays_pass(small_cfg):
    report = run_suite(small_cfg)
    again = spot_recheck(report, small_cfg, extra=2, limit=12)
    assert again and all(c.verdict == PASS for c in again)


def test_mutations_fail_designated_axioms():
    report = mutation_checks(SuiteConfig.make("rational", {"A": 1}))
    assert {c.id for c in report.checks} == {"drop_S", "nabla_without_binomial",
                                           "scale_eta_by_2", "swap_d"}
    for c in report.checks:
        assert c.verdict == FAIL and c.expected == FAIL and not c.unexpected
        assert c.counterexample["lhs"] != c.counterexample["rhs"]


def test_mutation_spot_values():
    model = Model(INTEGER, {"A": 1}, mutation="drop_S")
    inst = ax.instantiate(ax.get_axiom("hopf.right"), {"A": 1}, 7, 0)
    v = model.equal_upto(inst.lhs, inst.rhs, 5)
    assert not v.passed
    eta_model = Model(INTEGER, {"A": 1}, mutation="scale_eta_by_2")
    t = parse_term("eta{A}")
    from difflin.basis import Atom, mset
    assert eta_model.eval_entry(t, Atom("A", 1), mset(Atom("A", 1))) == 2


def test_unexpected_flags():
    assert CheckRecord("axiom", "x", FAIL).unexpected
    assert not CheckRecord("mutation", "x", FAIL, expected=FAIL).unexpected
    assert CheckRecord("mutation", "x", PASS, expected=FAIL).unexpected
    assert not CheckRecord("axiom", "x", SKIPPED).unexpected


def test_compare_reports_graph_equality():
    model = Model(INTEGER, {"A": 1})
    rec = compare(model, "axiom", "t", parse_term("sigma{A,A} ; sigma{A,A}"),
                  parse_term("id{A * A}"), 3, with_graph=True)
    assert rec.verdict == PASS and rec.graph_equal is True
    rec = compare(model, "axiom", "t", parse_term("eta{A} ; copy{A}"),
                  parse_term("eta{A} * u{A}"), 4, with_graph=True)
    assert rec.verdict == FAIL and rec.graph_equal is False and rec.counterexample


def test_seeded_pairs_are_reproducible():
    cfg = SuiteConfig.make("rational", {"A": 2, "B": 1})
    assert seeded_pairs(cfg, 4) == seeded_pairs(cfg, 4)
    assert len(seeded_pairs(cfg, 10)) == 10
