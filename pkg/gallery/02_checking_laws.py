"""Checking equations entrywise, and watching a broken model fail.

The same comparison drives the whole law suite: two terms are equal up to a
size cap when every matrix entry with small enough input and output agrees.
"""

from difflin import INTEGER, Model, RATIONAL, all_axioms, format_elem, parse_term
from difflin.axioms import instantiate

dims = {"A": 2, "B": 1}
model = Model(RATIONAL, dims)

# the linear rule: coderelict, then derelict, is the identity
lhs, rhs = parse_term("eta{A} ; eps{A}"), parse_term("id{A}")
print("eta ; eps = id ?", model.equal_upto(lhs, rhs, 4).passed)

# a false equation yields the first disagreeing entry
v = model.equal_upto(parse_term("eta{A} ; copy{A}"), parse_term("eta{A} * u{A}"), 4)
i, o, l, r = v.counterexample
print("eta ; copy = eta * u ?", v.passed, "| at", format_elem(i, dims), "->",
      format_elem(o, dims), ":", l, "vs", r)

# instantiate a few catalog schemas and check them
for entry in all_axioms(["comonad", "bialgebra"])[:6]:
    inst = instantiate(entry, dims, seed=7, index=0)
    ok = model.equal_upto(inst.lhs, inst.rhs, 4).passed
    print(f"{entry.id:<28} {inst.summary():<20} {'pass' if ok else 'FAIL'}")

# the Hopf law needs additive inverses; a model whose antipode is the identity breaks it
hopf = instantiate(next(e for e in all_axioms(["hopf"]) if e.id == "hopf.right"), dims, 7, 0)
good = Model(INTEGER, dims)
bad = Model(INTEGER, dims, mutation="drop_S")
print("\nhopf.right over the integers:", good.equal_upto(hopf.lhs, hopf.rhs, 5).passed)
v = bad.equal_upto(hopf.lhs, hopf.rhs, 5)
i, o, l, r = v.counterexample
print("with S replaced by the identity:", v.passed,
      f"(entry {format_elem(i, dims)} -> {format_elem(o, dims)}: {l} vs {r})")
