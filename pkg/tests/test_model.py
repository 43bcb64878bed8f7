from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import comb, factorial, prod

import pytest
from hypothesis import given, strategies as st

from difflin.basis import EMPTY, UNIT, Atom, MSet, Tup, basis_enum, mset, parse_elem
from difflin.errors import SemiringError, TypeCheckError, UnboundedError
from difflin.model import Model, multiset_partitions, sub_multisets
from difflin.objects import Base, parse_object as P
from difflin.semiring import BOOLEAN, INTEGER, NATURAL, RATIONAL
from difflin.terms import Lin, infer_type, parse_term

from .strategies import chains, elems

A = Base("A")
D = {"A": 2}
a1, a2 = Atom("A", 1), Atom("A", 2)


def E(src, obj):
    return parse_elem(src, P(obj), D)


@pytest.fixture
def model():
    return Model(RATIONAL, D)


# -- independent oracles for the generator tables ------------------------------------


def oracle_nabla(m1: MSet, m2: MSet, m: MSet) -> int:
    if m1 + m2 != m:
        return 0
    c1 = m1.counts()
    return prod(comb(n, c1[x]) for x, n in m.counts().items())


def oracle_copy(m: MSet, m1: MSet, m2: MSet) -> int:
    return 1 if m1 + m2 == m else 0


def oracle_d(m: MSet, x, out: MSet) -> int:
    return m.counts()[x] + 1 if m + mset(x) == out else 0


BANG_A = basis_enum(P("!A"), D, 5)


@given(st.sampled_from(BANG_A), st.sampled_from(BANG_A), st.sampled_from(BANG_A))
def test_nabla_and_copy_tables(m1, m2, m):
    model = Model(RATIONAL, D)
    assert model.gen_entry("nabla", (A,), Tup([m1, m2]), m) == oracle_nabla(m1, m2, m)
    assert model.gen_entry("copy", (A,), m, Tup([m1, m2])) == oracle_copy(m, m1, m2)


@given(st.sampled_from(BANG_A), st.sampled_from([a1, a2]), st.sampled_from(BANG_A))
def test_d_table(m, x, out):
    model = Model(RATIONAL, D)
    assert model.gen_entry("d", (A,), Tup([m, x]), out) == oracle_d(m, x, out)


@given(st.sampled_from(BANG_A))
def test_antipode_is_signed_diagonal(m):
    model = Model(INTEGER, D)
    for out in BANG_A:
        want = (-1) ** len(m) if out == m else 0
        assert model.gen_entry("S", (A,), m, out) == want


def test_small_entries(model):
    assert model.gen_entry("eps", (A,), mset(a1), a1) == 1
    assert model.gen_entry("eps", (A,), mset(a1, a1), a1) == 0
    assert model.gen_entry("eta", (A,), a2, mset(a2)) == 1
    assert model.gen_entry("weak", (A,), EMPTY, UNIT) == 1
    assert model.gen_entry("weak", (A,), mset(a1), UNIT) == 0
    assert model.gen_entry("u", (A,), UNIT, EMPTY) == 1
    assert model.gen_entry("copy", (A,), mset(a1, a1), Tup([mset(a1), mset(a1)])) == 1
    assert model.gen_entry("nabla", (A,), Tup([mset(a1), mset(a1)]), mset(a1, a1)) == 2
    assert model.gen_entry("d", (A,), Tup([mset(a1), a1]), mset(a1, a1)) == 2
    assert model.gen_entry("mI", (), UNIT, MSet([UNIT] * 3)) == 1


def test_delta_column(model):
    # every way of grouping [a1,a1,a2] into blocks, plus empty blocks
    m = mset(a1, a1, a2)
    for out in basis_enum(P("!!A"), D, 7):
        union = MSet(x for block in out.items for x in block.items)
        assert model.gen_entry("delta", (A,), m, out) == (1 if union == m else 0)


def test_monoidal_map(model):
    B = Base("B")
    mm = Model(RATIONAL, {"A": 2, "B": 1})
    b = Atom("B", 1)
    i = Tup([mset(a1, a2), mset(b, b)])
    # pairings of {a1,a2} with {b,b}: both matchings give the same multiset
    assert mm.gen_entry("m", (A, B), i, mset(Tup([a1, b]), Tup([a2, b]))) == 1
    assert mm.gen_entry("m", (A, B), Tup([mset(a1), EMPTY]), EMPTY) == 0
    assert mm.gen_entry("m", (A, B), Tup([EMPTY, EMPTY]), EMPTY) == 1


def test_combinatorial_helpers():
    m = mset(a1, a1, a2)
    subs = list(sub_multisets(m))
    assert len(subs) == 6
    assert sum(c for _, _, c in subs) == 2 ** 3
    parts = {p for p in multiset_partitions(m)}
    assert len(parts) == 4  # {a1,a1,a2} {a1}{a1,a2} {a1,a1}{a2} {a1}{a1}{a2}


# -- structural properties -------------------------------------------------------------


@given(chains(negatives=False), st.data())
def test_weight_is_preserved(t, data):
    model = Model(NATURAL, D)
    dom, cod = infer_type(t)
    o = data.draw(elems(cod, 4))
    for i in model.pull(t, o):
        assert i.weight == o.weight


@given(chains(), st.data())
def test_entry_agrees_with_vector(t, data):
    model = Model(RATIONAL, D)
    dom, cod = infer_type(t)
    i = data.draw(elems(dom, 3))
    vec = model.eval_vector(t, i, fallback_cap=5)
    for o in basis_enum(cod, D, 5):
        if o.weight == i.weight:
            assert vec.values.get(o, 0) == model.eval_entry(t, i, o)


def _lin(entries):
    return Lin("f", A, A, tuple((x, y, Fraction(c)) for x, y, c in entries))


lins = st.lists(st.tuples(st.sampled_from([a1, a2]), st.sampled_from([a1, a2]),
                          st.integers(-2, 2)), max_size=4).map(_lin)


@given(lins)
def test_eta_and_eps_are_natural(f):
    model = Model(RATIONAL, D)
    L = {"f": f}
    assert model.equal_upto(parse_term("eta{A} ; bang(lin f)", L),
                            parse_term("lin f ; eta{A}", L), 4)
    assert model.equal_upto(parse_term("bang(lin f) ; eps{A}", L),
                            parse_term("eps{A} ; lin f", L), 4)
    assert model.equal_upto(parse_term("bang(lin f) ; copy{A}", L),
                            parse_term("copy{A} ; bang(lin f) * bang(lin f)", L), 4)


@given(lins, lins)
def test_bang_is_functorial(f, g):
    model = Model(RATIONAL, D)
    g = Lin("g", A, A, g.entries)
    L = {"f": f, "g": g}
    assert model.equal_upto(parse_term("bang(lin f ; lin g)", L),
                            parse_term("bang(lin f) ; bang(lin g)", L), 4)


@given(lins, lins)
def test_sum_is_entrywise(f, g):
    model = Model(RATIONAL, D)
    g = Lin("g", A, A, g.entries)
    t = parse_term("lin f + lin g", {"f": f, "g": g})
    for x in (a1, a2):
        for y in (a1, a2):
            fx = sum((c for i, o, c in f.entries if (i, o) == (x, y)), Fraction(0))
            gx = sum((c for i, o, c in g.entries if (i, o) == (x, y)), Fraction(0))
            assert model.eval_entry(t, x, y) == fx + gx


def oracle_bang(f: Lin, m: MSet, n: MSet) -> Fraction:
    """Permanent of the item matrix divided by the input stabilizer size."""
    xs, ys = list(m.items), list(n.items)
    if len(xs) != len(ys):
        return Fraction(0)
    table = Counter()
    for i, o, c in f.entries:
        table[(i, o)] += c
    total = sum(prod(table[(x, y)] for x, y in zip(xs, perm)) for perm in permutations(ys))
    return Fraction(total) / prod(factorial(k) for k in m.counts().values())


@given(lins, st.sampled_from(basis_enum(P("!A"), D, 4)), st.sampled_from(basis_enum(P("!A"), D, 4)))
def test_bang_of_map_matches_permanent(f, m, n):
    model = Model(RATIONAL, D)
    assert model.eval_entry(parse_term("bang(lin f)", {"f": f}), m, n) == oracle_bang(f, m, n)


# -- semirings ---------------------------------------------------------------------------


def test_boolean_model_collapses_coefficients():
    model = Model(BOOLEAN, D)
    assert model.gen_entry("nabla", (A,), Tup([mset(a1), mset(a1)]), mset(a1, a1)) is True
    assert model.eval_entry(parse_term("copy{A} ; nabla{A}"), mset(a1), mset(a1)) is True


def test_negatives_required():
    with pytest.raises(SemiringError):
        Model(NATURAL, D).eval_entry(parse_term("S{A}"), EMPTY, EMPTY)
    with pytest.raises(SemiringError):
        Model(BOOLEAN, D).eval_entry(parse_term("-id{A}"), a1, a1)
    assert Model(INTEGER, D).eval_entry(parse_term("-id{A}"), a1, a1) == -1


def test_unbounded_rows():
    model = Model(RATIONAL, {"A": 1})
    t = parse_term("mI")
    with pytest.raises(UnboundedError):
        model.eval_vector(t, UNIT)
    res = model.eval_vector(t, UNIT, fallback_cap=4)
    assert res.approximate
    assert [len(o) for o in res.values] == [0, 1, 2, 3]
    exact = model.eval_vector(parse_term("mI ; weak{I}"), UNIT)
    assert not exact.approximate and exact.values == {UNIT: 1}


def test_type_checked_entries(model):
    with pytest.raises(TypeCheckError):
        model.eval_entry(parse_term("eta{A}"), mset(a1), mset(a1))


def test_counterexample_is_first_in_order(model):
    v = model.equal_upto(parse_term("copy{A}"), parse_term("copy{A} ; sigma{!A,!A}"), 4)
    assert v.passed
    v = model.equal_upto(parse_term("eta{A} ; copy{A}"), parse_term("eta{A} * u{A}"), 4)
    assert not v.passed
    i, o, lhs, rhs = v.counterexample
    assert (lhs, rhs) == (1, 0)
    assert o == Tup([EMPTY, mset(i)])
