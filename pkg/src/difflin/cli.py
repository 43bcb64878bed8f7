"""Command-line front end: ``difflin check | eval | equal | graph | axioms``.

Exit codes: 0 when everything checked out, 1 when a check failed (or two terms
differ), 2 for usage, parse and configuration errors.  Set ``DIFFLIN_WORKERS``
to run the law suite in several processes.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from . import axioms as ax
from .basis import format_elem, parse_elem
from .diagram import emit_dot, term_to_graph, terms_graph_equal
from .errors import DiffLinError
from .model import Model
from .semiring import get_semiring
from .termfile import TermFile, load_termfile
from .terms import infer_type, is_sum_free, pretty_print
from .verifier import (
    FAIL, SKIPPED, CheckReport, SuiteConfig, cross_checks, graph_checks, mutation_checks,
    run_suite,
)

DEFAULT_SEMIRING = "rational"
DEFAULT_DIMS = {"A": 1}
DEFAULT_SIZE_CAP = 4


class UsageError(Exception):
    pass


def parse_dims(text: str) -> dict[str, int]:
    """``"A=2,B=1"`` -> ``{"A": 2, "B": 1}``."""
    dims: dict[str, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition("=")
        name = name.strip()
        if not sep or not name.isidentifier() or name == "I":
            raise UsageError(f"bad dimension spec {part!r}; expected NAME=N")
        try:
            n = int(value)
        except ValueError:
            raise UsageError(f"bad dimension {value!r} for {name}") from None
        if n < 1:
            raise UsageError(f"dimension of {name} must be at least 1")
        dims[name] = n
    if not dims:
        raise UsageError("no base objects given")
    return dims


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--semiring", help="rational (default), integer, natural or boolean")
    p.add_argument("--dims", help="base dimensions, e.g. A=2,B=1 (default A=1)")
    p.add_argument("--size-cap", type=int, help="largest structural size compared (default 4)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="difflin",
        description="Evaluate and check differential-linear-category terms in the multiset model.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the law suite and related checks")
    _add_model_flags(p)
    p.add_argument("--tier", action="append", help="restrict to a tier (repeatable)")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--instantiations", type=int, default=3)
    p.add_argument("--pairs", type=int, default=5, help="seeded map pairs for --cross")
    p.add_argument("--cross", action="store_true", help="also run construction cross-checks")
    p.add_argument("--graph", action="store_true", help="also run the graph-equality cases")
    p.add_argument("--mutations", action="store_true", help="run only the mutation probes")
    p.add_argument("--all", action="store_true", help="suite, cross-checks, graph cases and mutations")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.add_argument("--output", help="also write the JSON report to this file")

    p = sub.add_parser("eval", help="evaluate the term of a term file")
    p.add_argument("file")
    _add_model_flags(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--entry", nargs=2, metavar=("IN", "OUT"), help="one matrix entry")
    g.add_argument("--vector", metavar="IN", help="the whole row of an input")
    p.add_argument("--fallback-cap", type=int, help="size cap for rows that cannot be bounded")
    p.add_argument("--term", help="name of the let to evaluate (default: main or the last)")

    p = sub.add_parser("equal", help="compare two terms (graph first, then the model)")
    p.add_argument("files", nargs="+", help="two term files, or one file with lets lhs and rhs")
    _add_model_flags(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("graph", help="show the string diagram of a term")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.add_argument("--term", help="name of the let to draw")
    p.add_argument("--dims", help=argparse.SUPPRESS)

    p = sub.add_parser("axioms", help="inspect the equation catalog")
    asub = p.add_subparsers(dest="axioms_command", required=True)
    q = asub.add_parser("list", help="list catalog entries")
    q.add_argument("--tier", action="append")
    q.add_argument("--json", action="store_true")
    return parser


# -- configuration --------------------------------------------------------------------


def _settings(args, tf: TermFile | None = None) -> tuple[str, dict[str, int], int]:
    semiring = args.semiring or (tf.semiring if tf else None) or DEFAULT_SEMIRING
    get_semiring(semiring)
    if args.dims:
        dims = parse_dims(args.dims)
    elif tf is not None and tf.dims:
        dims = dict(tf.dims)
    else:
        dims = dict(DEFAULT_DIMS)
    cap = args.size_cap if args.size_cap is not None else (
        tf.size_cap if tf is not None and tf.size_cap is not None else DEFAULT_SIZE_CAP)
    if cap < 1:
        raise UsageError("--size-cap must be at least 1")
    return get_semiring(semiring).name, dims, cap


def _header(cmd: str, semiring: str, dims: dict, cap: int, extra: str = "") -> str:
    d = ",".join(f"{k}={v}" for k, v in sorted(dims.items()))
    return f"difflin {cmd}: semiring={semiring} dims={d} size_cap={cap}{extra}"


def _load(path: str, dims_text: str | None) -> TermFile:
    extra = parse_dims(dims_text) if dims_text else dict(DEFAULT_DIMS)
    if not Path(path).exists():
        raise UsageError(f"no such file: {path}")
    return load_termfile(path, extra)


def _pick(tf: TermFile, name: str | None):
    if name is None:
        return tf.main_term()
    if name not in tf.lets:
        raise UsageError(f"the term file has no let named {name!r}")
    return tf.lets[name]


# -- subcommands ------------------------------------------------------------------------


def cmd_check(args, out) -> int:
    semiring, dims, cap = _settings(args)
    if args.tier:
        unknown = set(args.tier) - set(ax.TIERS)
        if unknown:
            raise UsageError(f"unknown tier(s): {', '.join(sorted(unknown))}; "
                             f"choose from {', '.join(ax.TIERS)}")
    if args.instantiations < 1:
        raise UsageError("--instantiations must be at least 1")
    cfg = SuiteConfig.make(semiring, dims, size_cap=cap, tiers=args.tier, seed=args.seed,
                           instantiations=args.instantiations, pairs=args.pairs)
    report = CheckReport(cfg.to_json())
    if args.mutations and not args.all:
        report.extend(mutation_checks(cfg))
    else:
        report.extend(run_suite(cfg))
        if args.cross or args.all:
            report.extend(cross_checks(cfg))
        if args.graph or args.all:
            report.extend(graph_checks(cfg))
        if args.all:
            report.extend(mutation_checks(cfg))
    text = report.dumps()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    if args.json:
        out.write(text)
    else:
        extra = f" seed={args.seed} instantiations={args.instantiations}"
        out.write(_header("check", semiring, dims, cap, extra) + "\n")
        for c in report.checks:
            out.write(_format_record(c) + "\n")
        s = report.summary
        out.write(f"summary: {s['total']} checks, {s['pass']} pass, {s['fail']} fail, "
                  f"{s['skipped']} skipped, {s['unexpected']} unexpected\n")
        if s["skipped"]:
            out.write(f"notice: {s['skipped']} check(s) skipped because semiring "
                      f"{semiring} has no negatives\n")
    return 0 if report.ok else 1


def _format_record(c) -> str:
    tag = c.verdict.upper()
    if c.expected == FAIL:
        tag += " (expected fail)"
    line = f"{tag:<22} {c.kind:<8} {c.id}"
    if c.instance:
        line += f"  [{c.instance}]"
    if c.graph_equal is not None:
        line += f"  graph_equal={str(c.graph_equal).lower()}"
    if c.counterexample:
        cx = c.counterexample
        line += f"\n    counterexample: in={cx['in']} out={cx['out']} lhs={cx['lhs']} rhs={cx['rhs']}"
    if c.reason and c.verdict != SKIPPED:
        line += f"\n    {c.reason}"
    elif c.reason:
        line += f"  ({c.reason})"
    return line


def cmd_eval(args, out) -> int:
    tf = _load(args.file, args.dims)
    semiring, dims, cap = _settings(args, tf)
    tf.dims.update(dims)
    term = _pick(tf, args.term)
    model = Model(get_semiring(semiring), dims)
    dom, cod = infer_type(term)
    ring = model.ring
    if args.entry:
        i = parse_elem(args.entry[0], dom, dims)
        o = parse_elem(args.entry[1], cod, dims)
        out.write(ring.fmt(model.eval_entry(term, i, o)) + "\n")
        return 0
    i = parse_elem(args.vector, dom, dims)
    fallback = args.fallback_cap if args.fallback_cap is not None else tf.fallback_cap
    res = model.eval_vector(term, i, fallback)
    if res.approximate:
        out.write(f"approximate: outputs restricted to size <= {fallback}\n")
    for o, v in res.values.items():
        out.write(f"{format_elem(o, dims)}: {ring.fmt(v)}\n")
    if not res.values:
        out.write("0\n")
    return 0


def cmd_equal(args, out) -> int:
    if len(args.files) == 1:
        tf = _load(args.files[0], args.dims)
        if "lhs" not in tf.lets or "rhs" not in tf.lets:
            raise UsageError("a single file must define lets named lhs and rhs")
        t1, t2 = tf.lets["lhs"], tf.lets["rhs"]
        tf2 = tf
    elif len(args.files) == 2:
        tf = _load(args.files[0], args.dims)
        tf2 = _load(args.files[1], args.dims)
        t1, t2 = tf.main_term(), tf2.main_term()
    else:
        raise UsageError("equal takes one or two term files")
    merged = TermFile(dims={**tf2.dims, **tf.dims}, semiring=tf.semiring or tf2.semiring,
                      size_cap=tf.size_cap or tf2.size_cap)
    semiring, dims, cap = _settings(args, merged)
    if infer_type(t1) != infer_type(t2):
        d1, c1 = infer_type(t1)
        d2, c2 = infer_type(t2)
        raise UsageError(f"the terms have different types: {d1} -> {c1} vs {d2} -> {c2}")
    result: dict = {"lhs": pretty_print(t1), "rhs": pretty_print(t2), "semiring": semiring,
                    "dims": dims, "size_cap": cap}
    if is_sum_free(t1) and is_sum_free(t2) and terms_graph_equal(t1, t2):
        result.update(equal=True, method="graph")
        message = "equal (graph)"
    else:
        model = Model(get_semiring(semiring), dims)
        v = model.equal_upto(t1, t2, cap)
        result.update(equal=v.passed, method="model", entries_checked=v.entries_checked)
        if v.passed:
            message = f"equal (model, cap {cap})"
        else:
            i, o, l, r = v.counterexample
            cx = {"in": format_elem(i, dims), "out": format_elem(o, dims),
                  "lhs": model.ring.fmt(l), "rhs": model.ring.fmt(r)}
            result["counterexample"] = cx
            message = (f"not equal (model, cap {cap})\n  counterexample: in={cx['in']} "
                       f"out={cx['out']} lhs={cx['lhs']} rhs={cx['rhs']}")
    if args.json:
        out.write(json.dumps(result, indent=2, sort_keys=True) + "\n")
    else:
        out.write(_header("equal", semiring, dims, cap) + "\n")
        out.write(message + "\n")
    return 0 if result["equal"] else 1


def cmd_graph(args, out) -> int:
    tf = _load(args.file, args.dims)
    term = _pick(tf, args.term)
    g = term_to_graph(term)
    if args.dot:
        out.write(emit_dot(g))
        return 0
    out.write(f"inputs: {', '.join(map(str, g.inputs)) or '(none)'}\n")
    out.write(f"outputs: {', '.join(map(str, g.outputs)) or '(none)'}\n")
    out.write(f"nodes: {len(g.nodes)}, wires: {len(g.wires)}\n")
    for k, node in enumerate(g.nodes):
        ins = ", ".join(_endpoint(g.wires[w].src) for w in g.node_in[k])
        label = "bang(...)" if node.inner is not None else node.label
        out.write(f"  n{k}: {label}  <- [{ins}]\n")
    outs = ", ".join(_endpoint(g.wires[w].src) for w in g.out_wires)
    out.write(f"  out <- [{outs}]\n")
    return 0


def _endpoint(ref) -> str:
    if ref[0] == "in":
        return f"in{ref[1]}"
    return f"n{ref[0]}.{ref[1]}"


def cmd_axioms(args, out) -> int:
    if args.tier:
        unknown = set(args.tier) - set(ax.TIERS)
        if unknown:
            raise UsageError(f"unknown tier(s): {', '.join(sorted(unknown))}")
    entries = ax.all_axioms(args.tier)
    if args.json:
        out.write(json.dumps([e.to_json() for e in entries], indent=2) + "\n")
        return 0
    for e in entries:
        neg = "  requires negatives" if e.requires_negatives else ""
        out.write(f"{e.id:<28} {e.tier:<20} {e.anchor}{neg}\n")
    out.write(f"{len(entries)} equations\n")
    return 0


COMMANDS = {"check": cmd_check, "eval": cmd_eval, "equal": cmd_equal, "graph": cmd_graph,
            "axioms": cmd_axioms}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, DiffLinError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
