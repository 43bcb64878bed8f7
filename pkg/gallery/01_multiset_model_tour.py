"""A short tour of the multiset model: objects, basis elements, generators.

Run with ``python3 gallery/01_multiset_model_tour.py``.
"""

from difflin import Model, RATIONAL, basis_enum, format_elem, parse_elem, parse_object, parse_term

dims = {"A": 2}
model = Model(RATIONAL, dims)

# !A is spanned by finite multisets of basis vectors of A
bangA = parse_object("!A")
print("basis of !A up to size 3:", [format_elem(e, dims) for e in basis_enum(bangA, dims, 3)])

# contraction splits a multiset every possible way, coefficient 1 each
m = parse_elem("[a1,a1,a2]", bangA, dims)
copy = parse_term("copy{A}")
print("\ncopy on [a1,a1,a2]:")
for out, c in model.eval_vector(copy, m).values.items():
    print("  ", format_elem(out, dims), c)

# cocontraction glues two multisets together, counting which copies came from where
nabla = parse_term("nabla{A}")
pair = parse_elem("([a1],[a1,a2])", parse_object("!A * !A"), dims)
print("\nnabla on ([a1],[a1,a2]):", {format_elem(o, dims): c
                                     for o, c in model.eval_vector(nabla, pair).values.items()})

# splitting and merging again multiplies by 2^n on a multiset of n items
loop = parse_term("copy{A} ; nabla{A}")
print("copy ; nabla on [a1,a1,a2]:", model.eval_entry(loop, m, m))

# digging lists every way of grouping the items into blocks
delta = parse_term("delta{A}")
print("\ndelta{A} on [a1,a2], groupings without empty blocks:")
for out in basis_enum(parse_object("!!A"), dims, 5):
    v = model.eval_entry(delta, parse_elem("[a1,a2]", bangA, dims), out)
    if v and all(len(b) for b in out.items):
        print("  ", format_elem(out, dims), v)
