"""Typed string-diagram terms for differential linear categories, evaluated
exactly in the multiset model over a choice of commutative semiring."""

from __future__ import annotations

from .axioms import (
    CATALOG, TIER_COUNTS, TIERS, AxiomEntry, all_axioms, build_antipode, build_d_from_eta,
    build_eta_from_d, build_m_from_nabla, build_mI_from_nabla, build_nabla_from_m, build_neg,
    build_phi, build_sum, build_u_from_m, build_zero,
)
from .basis import (
    EMPTY, UNIT, Atom, BasisElem, MSet, Tup, basis_enum, format_elem, mset, parse_elem,
)
from .diagram import PortGraph, emit_dot, graphs_equal, term_to_graph
from .errors import (
    DiffLinError, GraphError, ParseError, SemiringError, TypeCheckError, UnboundedError,
    UnknownNameError,
)
from .graph_eval import GraphEvaluator, SupportBounds, infer_support
from .model import UNBOUNDED, Model, Verdict, eval_entry, equal_upto, gen_entry
from .objects import I, Bang, Base, Tensor, Unit, parse_object, tensor
from .semiring import BOOLEAN, INTEGER, NATURAL, RATIONAL, Semiring, get_semiring
from .termfile import TermFile, load_termfile, parse_termfile
from .terms import Lin, infer_type, parse_term, pretty_print
from .verifier import (
    CheckRecord, CheckReport, SuiteConfig, cross_checks, graph_checks, mutation_checks,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "AxiomEntry",
    "BOOLEAN",
    "Bang",
    "Base",
    "BasisElem",
    "CATALOG",
    "CheckRecord",
    "CheckReport",
    "DiffLinError",
    "EMPTY",
    "GraphError",
    "GraphEvaluator",
    "I",
    "INTEGER",
    "Lin",
    "MSet",
    "Model",
    "NATURAL",
    "ParseError",
    "PortGraph",
    "RATIONAL",
    "Semiring",
    "SemiringError",
    "SuiteConfig",
    "SupportBounds",
    "TIERS",
    "TIER_COUNTS",
    "Tensor",
    "TermFile",
    "Tup",
    "TypeCheckError",
    "UNBOUNDED",
    "UNIT",
    "UnboundedError",
    "Unit",
    "UnknownNameError",
    "Verdict",
    "all_axioms",
    "annotations",
    "basis_enum",
    "build_antipode",
    "build_d_from_eta",
    "build_eta_from_d",
    "build_mI_from_nabla",
    "build_m_from_nabla",
    "build_nabla_from_m",
    "build_neg",
    "build_phi",
    "build_sum",
    "build_u_from_m",
    "build_zero",
    "cross_checks",
    "emit_dot",
    "equal_upto",
    "eval_entry",
    "format_elem",
    "gen_entry",
    "get_semiring",
    "graph_checks",
    "graphs_equal",
    "infer_support",
    "infer_type",
    "load_termfile",
    "mset",
    "mutation_checks",
    "parse_elem",
    "parse_object",
    "parse_term",
    "parse_termfile",
    "pretty_print",
    "run_suite",
    "tensor",
    "term_to_graph",
]
