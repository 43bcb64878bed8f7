from __future__ import annotations

import re

import pytest
from hypothesis import given

from difflin.diagram import emit_dot, graphs_equal, term_to_graph, terms_graph_equal
from difflin.errors import GraphError
from difflin.terms import parse_term, pretty_print

from .strategies import chains


def G(src):
    return term_to_graph(parse_term(src))


def same(a, b):
    return terms_graph_equal(parse_term(a), parse_term(b))


@pytest.mark.parametrize("lhs, rhs", [
    ("eta{A} * id{B} ; id{!A} * eta{B}", "id{A} * eta{B} ; eta{A} * id{!B}"),
    ("sigma{A,B} ; sigma{B,A}", "id{A * B}"),
    ("sigma{A,B} ; eta{B} * eta{A}", "eta{A} * eta{B} ; sigma{!A,!B}"),
    ("(copy{A} ; id{!A * !A}) ; eps{A} * eps{A}", "copy{A} ; (eps{A} * eps{A})"),
    ("bang(eta{A} ; id{!A})", "bang(eta{A})"),
    ("eta{A} * eta{B}", "sigma{A,B} ; eta{B} * eta{A} ; sigma{!B,!A}"),
    ("weak{A} * weak{B}", "sigma{!A,!B} ; weak{B} * weak{A} ; id{I}"),
])
def test_smc_equal(lhs, rhs):
    assert same(lhs, rhs)


@pytest.mark.parametrize("lhs, rhs", [
    ("eta{A} ; eps{A}", "id{A}"),
    ("copy{A}", "copy{A} ; sigma{!A,!A}"),
    ("delta{A} ; eps{!A}", "id{!A}"),
    ("eta{A} ; copy{A}", "eta{A} * u{A}"),
    ("bang(eta{A})", "delta{A}"),
    ("copy{A} ; eps{A} * weak{A}", "copy{A} ; weak{A} * eps{A} ; sigma{I, A}"),
])
def test_smc_distinct(lhs, rhs):
    assert not same(lhs, rhs)


def test_floating_components_are_order_free():
    assert same("weak{A} * u{A} * eta{B}", "weak{A} * eta{B} * u{A} ; sigma{!B,!A}")
    assert same("u{A} * u{B}", "u{B} * u{A} ; sigma{!B,!A}")


@given(chains())
def test_canonical_code_invariant_under_identity_padding(t):
    from difflin.terms import Id, comp, infer_type
    dom, cod = infer_type(t)
    padded = comp(Id(dom), t, Id(cod))
    assert terms_graph_equal(t, padded)
    assert terms_graph_equal(t, parse_term(pretty_print(t)))


def test_graph_shape_and_dot():
    g = G("eta{A} ; copy{A}")
    g.check()
    assert len(g.nodes) == 2
    assert len(g.wires) == 4  # input wire, inner wire, two outputs
    dot = emit_dot(g)
    assert dot.startswith("digraph")
    assert len(re.findall(r"^\s*\w+ -> \w+ \[", dot, re.M)) == 4
    boxed = emit_dot(G("bang(eta{A} ; eps{A})"))
    assert "subgraph cluster_" in boxed


def test_errors():
    with pytest.raises(GraphError):
        G("id{A} + id{A}")
    with pytest.raises(GraphError):
        G("-id{A}")
    with pytest.raises(GraphError):
        graphs_equal(G("id{A}"), G("id{B}"))
