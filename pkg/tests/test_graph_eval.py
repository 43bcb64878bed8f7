from __future__ import annotations

from hypothesis import given, strategies as st

from difflin.basis import UNIT, basis_enum, mset
from difflin.diagram import term_to_graph
from difflin.graph_eval import GraphEvaluator, infer_support
from difflin.model import UNBOUNDED, Model
from difflin.semiring import INTEGER, RATIONAL
from difflin.terms import infer_type, parse_term

from .strategies import DIMS, chains, elems


@given(chains(), st.data())
def test_graph_and_term_evaluators_agree(t, data):
    model = Model(INTEGER, DIMS)
    ev = GraphEvaluator(model)
    g = term_to_graph(t)
    dom, cod = infer_type(t)
    o = data.draw(elems(cod, 4))
    assert ev.pull(g, o) == model.pull(t, o)
    i = data.draw(elems(dom, 4))
    assert ev.entry(g, i, o) == model.pull(t, o).get(i, 0)


def test_support_of_unit_maps():
    model = Model(RATIONAL, {"A": 1})
    g = term_to_graph(parse_term("mI ; weak{I}"))
    bounds = infer_support(g, UNIT, None, model)
    assert bounds.is_bounded()
    inner = [w for w in range(len(g.wires)) if w not in g.in_wires + g.out_wires]
    assert bounds[inner[0]] == frozenset([mset()])
    g2 = term_to_graph(parse_term("mI"))
    assert not infer_support(g2, UNIT, None, model).is_bounded()


def test_rows_are_supersets_of_support():
    model = Model(RATIONAL, {"A": 2})
    ev = GraphEvaluator(model)
    t = parse_term("copy{A} ; nabla{A} ; eps{A}")
    g = term_to_graph(t)
    for i in basis_enum(infer_type(t)[0], model.dims, 3):
        row = ev.row(g, i)
        assert row is not UNBOUNDED
        for o in basis_enum(infer_type(t)[1], model.dims, 3):
            if model.eval_entry(t, i, o) != 0:
                assert o in row
