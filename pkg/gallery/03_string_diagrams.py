"""String diagrams: when wiring alone proves an equation, and when it does not."""

from difflin import Model, RATIONAL, emit_dot, parse_term, term_to_graph
from difflin.diagram import terms_graph_equal

model = Model(RATIONAL, {"A": 2, "B": 1})

pairs = [
    ("eta{A} * id{B} ; id{!A} * eta{B}", "id{A} * eta{B} ; eta{A} * id{!B}"),
    ("sigma{A,B} ; eta{B} * eta{A}", "eta{A} * eta{B} ; sigma{!A,!B}"),
    ("copy{A}", "copy{A} ; sigma{!A,!A}"),
    ("eta{A} ; copy{A}", "eta{A} * u{A}"),
]
for lhs, rhs in pairs:
    t1, t2 = parse_term(lhs), parse_term(rhs)
    same_graph = terms_graph_equal(t1, t2)
    same_matrix = model.equal_upto(t1, t2, 4).passed
    print(f"{lhs:<36} vs {rhs:<36} graph={same_graph!s:<5} model={same_matrix}")

# cocommutativity holds in the model but is not a fact about wiring, so the graphs differ

g = term_to_graph(parse_term("bang(eta{A} ; eps{A}) ; copy{A}"))
print(f"\n{len(g.nodes)} nodes, {len(g.wires)} wires; DOT follows\n")
print(emit_dot(g))
