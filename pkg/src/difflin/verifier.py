"""Law suites, construction cross-checks, mutation probes and graph checks.

Every check produces a :class:`CheckRecord`; a :class:`CheckReport` collects
them in a fixed order so that identical configurations give byte-identical JSON.
Wall-clock timings are kept on the records but left out of the JSON report.
"""

from __future__ import annotations

import json
import os
import random
import time
from collections import Counter
from collections.abc import Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import axioms as ax
from .basis import format_elem
from .diagram import terms_graph_equal
from .errors import DiffLinError
from .model import MUTATIONS, Model
from .objects import Base
from .semiring import Semiring, get_semiring
from .terms import Lin, MorTerm, is_sum_free, parse_term, substitute

PASS, FAIL, SKIPPED, APPROXIMATE = "pass", "fail", "skipped", "approximate"


@dataclass(frozen=True)
class SuiteConfig:
    semiring: str = "rational"
    dims: tuple[tuple[str, int], ...] = (("A", 2), ("B", 1))
    size_cap: int = 4
    tiers: tuple[str, ...] | None = None
    seed: int = 7
    instantiations: int = 3
    pairs: int = 5
    workers: int = 1

    @property
    def ring(self) -> Semiring:
        return get_semiring(self.semiring)

    @property
    def dims_map(self) -> dict[str, int]:
        return dict(self.dims)

    def to_json(self) -> dict:
        return {
            "semiring": self.ring.name,
            "dims": {k: v for k, v in self.dims},
            "size_cap": self.size_cap,
            "tiers": list(self.tiers) if self.tiers is not None else "all",
            "seed": self.seed,
            "instantiations": self.instantiations,
            "pairs": self.pairs,
        }

    @staticmethod
    def make(semiring="rational", dims: Mapping[str, int] | None = None, **kw) -> "SuiteConfig":
        d = tuple(sorted((dims or {"A": 2, "B": 1}).items()))
        if "tiers" in kw and kw["tiers"] is not None:
            kw["tiers"] = tuple(kw["tiers"])
        return SuiteConfig(semiring=get_semiring(semiring).name, dims=d, **kw)


@dataclass
class CheckRecord:
    kind: str
    id: str
    verdict: str
    tier: str = ""
    instance: str = ""
    expected: str = PASS
    reason: str = ""
    counterexample: dict | None = None
    entries_checked: int = 0
    graph_equal: bool | None = None
    model_equal: bool | None = None
    wall_time: float = 0.0

    @property
    def unexpected(self) -> bool:
        if self.verdict == SKIPPED:
            return False
        if self.kind == "graph":
            return self.verdict == FAIL
        if self.expected == FAIL:
            return self.verdict != FAIL
        return self.verdict == FAIL

    def to_json(self) -> dict:
        out = {
            "kind": self.kind, "id": self.id, "tier": self.tier, "instance": self.instance,
            "verdict": self.verdict, "expected": self.expected,
            "entries_checked": self.entries_checked,
        }
        if self.reason:
            out["reason"] = self.reason
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.graph_equal is not None:
            out["graph_equal"] = self.graph_equal
        if self.model_equal is not None:
            out["model_equal"] = self.model_equal
        return out


@dataclass
class CheckReport:
    config: dict
    checks: list[CheckRecord] = field(default_factory=list)

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.checks.extend(other.checks)
        return self

    @property
    def summary(self) -> dict:
        counts = Counter(c.verdict for c in self.checks)
        return {
            "total": len(self.checks),
            "pass": counts.get(PASS, 0),
            "fail": counts.get(FAIL, 0),
            "skipped": counts.get(SKIPPED, 0),
            "approximate": counts.get(APPROXIMATE, 0),
            "unexpected": sum(c.unexpected for c in self.checks),
        }

    @property
    def ok(self) -> bool:
        return self.summary["unexpected"] == 0

    def to_json(self) -> dict:
        return {"config": self.config, "checks": [c.to_json() for c in self.checks],
                "summary": self.summary}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def by_id(self, cid: str) -> list[CheckRecord]:
        return [c for c in self.checks if c.id == cid]


REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["config", "checks", "summary"],
    "additionalProperties": False,
    "properties": {
        "config": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "id", "tier", "instance", "verdict", "expected",
                             "entries_checked"],
                "additionalProperties": False,
                "properties": {
                    "kind": {"enum": ["axiom", "cross", "mutation", "graph"]},
                    "id": {"type": "string"},
                    "tier": {"type": "string"},
                    "instance": {"type": "string"},
                    "verdict": {"enum": [PASS, FAIL, SKIPPED, APPROXIMATE]},
                    "expected": {"enum": [PASS, FAIL]},
                    "reason": {"type": "string"},
                    "entries_checked": {"type": "integer", "minimum": 0},
                    "graph_equal": {"type": "boolean"},
                    "model_equal": {"type": "boolean"},
                    "counterexample": {
                        "type": "object",
                        "required": ["in", "out", "lhs", "rhs"],
                        "additionalProperties": False,
                        "properties": {k: {"type": "string"} for k in ("in", "out", "lhs", "rhs")},
                    },
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["total", "pass", "fail", "skipped", "approximate", "unexpected"],
            "properties": {k: {"type": "integer", "minimum": 0}
                           for k in ("total", "pass", "fail", "skipped", "approximate",
                                     "unexpected")},
        },
    },
}


# -- helpers ---------------------------------------------------------------------------


def _counterexample(model: Model, cx) -> dict:
    i, o, lhs, rhs = cx
    ring = model.ring
    return {"in": format_elem(i, model.dims), "out": format_elem(o, model.dims),
            "lhs": ring.fmt(lhs), "rhs": ring.fmt(rhs)}


def compare(model: Model, kind: str, cid: str, lhs: MorTerm, rhs: MorTerm, cap: int, *,
            tier: str = "", instance: str = "", expected: str = PASS,
            with_graph: bool = False) -> CheckRecord:
    """Entrywise comparison of two terms, packaged as a record."""
    t0 = time.perf_counter()
    rec = CheckRecord(kind, cid, PASS, tier=tier, instance=instance, expected=expected)
    try:
        verdict = model.equal_upto(lhs, rhs, cap)
    except DiffLinError as exc:
        rec.verdict = FAIL
        rec.reason = f"{type(exc).__name__}: {exc}"
        rec.wall_time = time.perf_counter() - t0
        return rec
    rec.entries_checked = verdict.entries_checked
    rec.model_equal = verdict.passed
    if not verdict.passed:
        rec.verdict = FAIL
        rec.counterexample = _counterexample(model, verdict.counterexample)
    if with_graph and is_sum_free(lhs) and is_sum_free(rhs):
        rec.graph_equal = terms_graph_equal(lhs, rhs)
        if rec.graph_equal and not verdict.passed:
            rec.reason = "graph equality disagrees with the model"
    rec.wall_time = time.perf_counter() - t0
    return rec


def _workers(cfg: SuiteConfig) -> int:
    env = os.environ.get("DIFFLIN_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return max(1, cfg.workers)


# -- axiom suite --------------------------------------------------------------------------


def _suite_task(args) -> list[CheckRecord]:
    cfg, aid = args
    entry = ax.get_axiom(aid)
    ring = cfg.ring
    model = Model(ring, cfg.dims_map)
    out = []
    for k in range(cfg.instantiations):
        if entry.requires_negatives and not ring.has_negatives:
            out.append(CheckRecord("axiom", entry.id, SKIPPED, tier=entry.tier,
                                   instance=f"#{k}", reason="requires negatives"))
            continue
        inst = ax.instantiate(entry, cfg.dims_map, cfg.seed, k, ring.name == "boolean")
        out.append(compare(model, "axiom", entry.id, inst.lhs, inst.rhs, cfg.size_cap,
                           tier=entry.tier, instance=f"#{k}: {inst.summary()}",
                           with_graph=True))
    return out


def run_suite(cfg: SuiteConfig) -> CheckReport:
    """Check every selected catalog equation for every instantiation."""
    entries = ax.all_axioms(cfg.tiers)
    tasks = [(cfg, e.id) for e in entries]
    workers = _workers(cfg)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_suite_task, tasks))
    else:
        results = [_suite_task(t) for t in tasks]
    report = CheckReport(cfg.to_json())
    for recs in results:
        report.checks.extend(recs)
    return report


# -- cross-checks ----------------------------------------------------------------------------


def _native_matrix(model: Model, maps: Sequence[tuple[int, Lin]]) -> dict:
    """Coefficientwise linear combination ``sum sign * f`` computed directly from the
    entry lists (the oracle the constructions are compared against)."""
    ring = model.ring
    out: dict = {}
    for sign, lin in maps:
        for i, o, c in lin.entries:
            v = ring.from_literal(c)
            if sign < 0:
                v = ring.neg(v)
            key = (i, o)
            out[key] = ring.add(out[key], v) if key in out else v
    return {k: v for k, v in out.items() if not ring.is_zero(v)}


def _matrix_record(model: Model, cid: str, term: MorTerm, expected: dict, cap: int,
                   instance: str) -> CheckRecord:
    t0 = time.perf_counter()
    got = model.matrix(term, cap)
    ring = model.ring
    expected = {k: v for k, v in expected.items() if k[0].size <= cap and k[1].size <= cap}
    bad = [k for k in set(got) | set(expected)
           if got.get(k, ring.zero) != expected.get(k, ring.zero)]
    rec = CheckRecord("cross", cid, PASS, tier="convolution-agreement", instance=instance,
                      entries_checked=len(got) + len(expected))
    if bad:
        i, o = min(bad, key=lambda k: (k[1].order_key, k[0].order_key))
        rec.verdict = FAIL
        rec.counterexample = _counterexample(
            model, (i, o, got.get((i, o), ring.zero), expected.get((i, o), ring.zero)))
    rec.wall_time = time.perf_counter() - t0
    return rec


def _lin_summary(model: Model, lin: Lin) -> str:
    body = ", ".join(f"{format_elem(i, model.dims)}->{format_elem(o, model.dims)}: {c}"
                     for i, o, c in lin.entries)
    return f"{lin.name} : {lin.dom} -> {lin.cod} {{{body}}}"


def seeded_pairs(cfg: SuiteConfig, n: int) -> list[tuple[Lin, Lin, Lin]]:
    """``n`` seeded triples ``(f, g, h)`` of random maps between base objects."""
    dims = cfg.dims_map
    bases = sorted(dims)
    values = (0, 1) if cfg.ring.name == "boolean" else (0, 1, 2)
    out = []
    for k in range(n):
        rng = random.Random(f"{cfg.seed}:pair:{k}")
        a = Base(bases[k % len(bases)])
        b = Base(bases[(k // len(bases)) % len(bases)])
        f = ax.random_lin("f", a, b, dims, rng, values)
        g = ax.random_lin("g", a, b, dims, rng, values)
        h = ax.random_lin("h", a, b, dims, rng, values)
        out.append((f, g, h))
    return out


def cross_checks(cfg: SuiteConfig) -> CheckReport:
    """Compare the derived constructions with native structure."""
    ring = cfg.ring
    dims = cfg.dims_map
    cap = cfg.size_cap
    model = Model(ring, dims)
    report = CheckReport(cfg.to_json())
    add = report.checks.append

    for k, (f, g, h) in enumerate(seeded_pairs(cfg, cfg.pairs)):
        tag = f"pair {k}: {_lin_summary(model, f)}; {_lin_summary(model, g)}"
        add(_matrix_record(model, "induced-sum", ax.build_sum(f, g),
                           _native_matrix(model, [(1, f), (1, g)]), cap, tag))
        add(_matrix_record(model, "induced-zero", ax.build_zero(f.dom, f.cod), {}, cap,
                           f"pair {k}: {f.dom} -> {f.cod}"))
        if ring.has_negatives:
            add(_matrix_record(model, "induced-neg", ax.build_neg(f),
                               _native_matrix(model, [(-1, f)]), cap,
                               f"pair {k}: {_lin_summary(model, f)}"))
        else:
            add(CheckRecord("cross", "induced-neg", SKIPPED, tier="convolution-agreement",
                            instance=f"pair {k}", reason="requires negatives"))
        tag3 = f"pair {k}: f, g, h as above with h = {_lin_summary(model, h)}"
        add(compare(model, "cross", "induced-sum.assoc",
                    ax.build_sum(ax.build_sum(f, g), h), ax.build_sum(f, ax.build_sum(g, h)),
                    cap, tier="induced-monoid", instance=tag3))
        add(compare(model, "cross", "induced-sum.comm", ax.build_sum(f, g), ax.build_sum(g, f),
                    cap, tier="induced-monoid", instance=tag))
        add(compare(model, "cross", "induced-sum.unit",
                    ax.build_sum(f, ax.build_zero(f.dom, f.cod)), f,
                    cap, tier="induced-monoid", instance=tag))

    bases = [Base(b) for b in sorted(dims)]
    for a in bases:
        add(compare(model, "cross", "roundtrip.nabla-from-m", ax.build_nabla_from_m(a),
                    parse_term(f"nabla{{{a}}}"), cap, tier="roundtrip", instance=f"A={a}"))
        add(compare(model, "cross", "roundtrip.u-from-m", ax.build_u_from_m(a),
                    parse_term(f"u{{{a}}}"), cap, tier="roundtrip", instance=f"A={a}"))
    for a in bases:
        for b in bases:
            add(compare(model, "cross", "roundtrip.m-from-nabla", ax.build_m_from_nabla(a, b),
                        parse_term(f"m{{{a},{b}}}"), cap, tier="roundtrip",
                        instance=f"A={a}, B={b}"))
    add(compare(model, "cross", "roundtrip.mI-from-nabla", ax.build_mI_from_nabla(),
                parse_term("mI"), cap, tier="roundtrip", instance="-"))
    for a in bases:
        add(compare(model, "cross", "roundtrip.d-from-eta", ax.build_d_from_eta(a),
                    parse_term(f"d{{{a}}}"), cap, tier="roundtrip", instance=f"A={a}"))
        add(compare(model, "cross", "roundtrip.eta-from-d", ax.build_eta_from_d(a),
                    parse_term(f"eta{{{a}}}"), cap, tier="roundtrip", instance=f"A={a}"))
        if ring.has_negatives:
            add(compare(model, "cross", "antipode.native", ax.build_antipode(a, ring, dims),
                        parse_term(f"S{{{a}}}"), cap, tier="roundtrip", instance=f"A={a}"))
        else:
            add(CheckRecord("cross", "antipode.native", SKIPPED, tier="roundtrip",
                            instance=f"A={a}", reason="requires negatives"))
    return report


# -- mutations -----------------------------------------------------------------------------

# mutation -> (designated axiom, semiring it is probed over)
MUTATION_TARGETS: dict[str, tuple[str, str]] = {
    "scale_eta_by_2": ("cd.3", "rational"),
    "nabla_without_binomial": ("bimonoid.nabla-copy", "rational"),
    "drop_S": ("hopf.right", "integer"),
    "swap_d": ("D.2", "rational"),
}

MUTATION_MIN_CAP = 5


def mutation_checks(cfg: SuiteConfig) -> CheckReport:
    """Each mutation must break its designated equation with a counterexample."""
    cap = max(cfg.size_cap, MUTATION_MIN_CAP)
    report = CheckReport({**cfg.to_json(), "mutation_size_cap": cap})
    for name in sorted(MUTATIONS):
        aid, ring_name = MUTATION_TARGETS[name]
        entry = ax.get_axiom(aid)
        model = Model(get_semiring(ring_name), cfg.dims_map, mutation=name)
        inst = ax.instantiate(entry, cfg.dims_map, cfg.seed, 0)
        rec = compare(model, "mutation", name, inst.lhs, inst.rhs, cap, tier=aid,
                      instance=f"{ring_name}; {inst.summary()}", expected=FAIL)
        if rec.verdict == PASS:
            rec.reason = "mutation was not detected by its designated equation"
        report.checks.append(rec)
    return report


# -- graph checks --------------------------------------------------------------------------


def graph_cases(dims: Mapping[str, int], seed: int = 7) -> list[tuple[str, MorTerm, MorTerm, bool]]:
    """Designated pairs ``(id, lhs, rhs, smc_provable)``."""
    bases = sorted(dims)
    a = bases[0]
    b = bases[1] if len(bases) > 1 else bases[0]
    rng = random.Random(f"{seed}:graph")
    objects = {"A": Base(a), "B": Base(b)}
    lins = {"f": ax.random_lin("f", Base(a), Base(a), dims, rng),
            "g": ax.random_lin("g", Base(b), Base(b), dims, rng)}
    slots = {"f": Lin("f", Base("A"), Base("A"), placeholder=True),
             "g": Lin("g", Base("B"), Base("B"), placeholder=True)}

    def P(s):
        return substitute(parse_term(s, slots), objects, lins)

    smc = [
        ("interchange", "lin f * id{B} ; id{A} * lin g", "id{A} * lin g ; lin f * id{B}"),
        ("symmetry-naturality", "sigma{A,B} ; lin g * lin f", "lin f * lin g ; sigma{A,B}"),
        ("symmetry-involution", "sigma{!A,B} ; sigma{B,!A}", "id{!A * B}"),
        ("tensor-associativity", "(copy{A} * eta{B}) * (weak{A} * eps{B})",
         "copy{A} * (eta{B} * weak{A}) * eps{B}"),
        ("identity-units", "id{!A} ; delta{A} ; id{!!A}", "delta{A}"),
        ("symmetry-naturality-generators", "copy{A} * eta{B} ; sigma{!A * !A, !B}",
         "sigma{!A,B} ; eta{B} * copy{A}"),
        ("interchange-in-box", "bang(lin f * id{B} ; id{A} * lin g)",
         "bang(id{A} * lin g ; lin f * id{B})"),
    ]
    non_smc = [
        ("linear-rule", "eta{A} ; eps{A}", "id{A}"),
        ("cocommutativity", "copy{A}", "copy{A} ; sigma{!A,!A}"),
        ("comonad-counit", "delta{A} ; eps{!A}", "id{!A}"),
        ("comonoid-counit", "copy{A} ; weak{A} * id{!A}", "id{!A}"),
        ("codereliction-split", "eta{A} ; copy{A}", "eta{A} * u{A}"),
    ]
    return ([(cid, P(l), P(r), True) for cid, l, r in smc]
            + [(cid, P(l), P(r), False) for cid, l, r in non_smc])


def graph_checks(cfg: SuiteConfig) -> CheckReport:
    """SMC-provable pairs must be graph-equal and model-equal; the others must be
    graph-distinct, with the model deciding."""
    model = Model(cfg.ring, cfg.dims_map)
    report = CheckReport(cfg.to_json())
    for cid, lhs, rhs, smc in graph_cases(cfg.dims_map, cfg.seed):
        t0 = time.perf_counter()
        geq = terms_graph_equal(lhs, rhs)
        v = model.equal_upto(lhs, rhs, cfg.size_cap)
        ok = (geq and v.passed) if smc else (not geq)
        rec = CheckRecord("graph", cid, PASS if ok else FAIL,
                          tier="smc" if smc else "non-smc", instance="-",
                          entries_checked=v.entries_checked, graph_equal=geq,
                          model_equal=v.passed)
        if not v.passed:
            rec.counterexample = _counterexample(model, v.counterexample)
        rec.wall_time = time.perf_counter() - t0
        report.checks.append(rec)
    return report


def spot_recheck(report: CheckReport, cfg: SuiteConfig, extra: int = 1,
                 limit: int = 10) -> list[CheckRecord]:
    """Re-run up to ``limit`` passing axiom checks at ``size_cap + extra``."""
    bigger = SuiteConfig(**{**cfg.__dict__, "size_cap": cfg.size_cap + extra})
    ids = []
    for c in report.checks:
        if c.kind == "axiom" and c.verdict == PASS and c.id not in ids:
            ids.append(c.id)
    out = []
    for aid in ids[:limit]:
        out.extend(_suite_task((bigger, aid)))
    return out


__all__ = [
    "APPROXIMATE", "CheckRecord", "CheckReport", "FAIL", "MUTATION_TARGETS", "PASS",
    "REPORT_SCHEMA", "SKIPPED", "SuiteConfig", "compare", "cross_checks", "graph_cases",
    "graph_checks", "mutation_checks", "run_suite", "seeded_pairs", "spot_recheck",
]
