"""Addition of maps recovered from the bialgebra, and structure rebuilt from other structure."""

from fractions import Fraction

from difflin import Lin, Model, RATIONAL, Base, build_neg, build_sum, format_elem, parse_term
from difflin.axioms import build_d_from_eta, build_m_from_nabla, build_nabla_from_m
from difflin.basis import Atom

A = Base("A")
dims = {"A": 2}
model = Model(RATIONAL, dims)
a1, a2 = Atom("A", 1), Atom("A", 2)

f = Lin("f", A, A, ((a1, a1, Fraction(1)), (a1, a2, Fraction(2))))
g = Lin("g", A, A, ((a1, a2, Fraction(3)), (a2, a2, Fraction(-1))))

# f + g computed purely from eta, copy, bang, nabla and eps
s = build_sum(f, g)
print("entries of the induced sum f + g:")
for (i, o), v in sorted(model.matrix(s, 2).items(), key=lambda kv: (kv[0][0], kv[0][1])):
    print(f"  {format_elem(i, dims)} -> {format_elem(o, dims)}: {v}")

# -f through the antipode
n = build_neg(f, RATIONAL)
print("\n-f at a1 -> a2:", model.eval_entry(n, a1, a2))

# cocontraction rebuilt from digging and the monoidal map; monoidal map rebuilt from cocontraction
print("\nnabla rebuilt from m   :", model.equal_upto(build_nabla_from_m(A), parse_term("nabla{A}"), 5).passed)
print("m rebuilt from nabla   :", model.equal_upto(build_m_from_nabla(A, A), parse_term("m{A,A}"), 5).passed)
print("d rebuilt from eta     :", model.equal_upto(build_d_from_eta(A), parse_term("d{A}"), 5).passed)
