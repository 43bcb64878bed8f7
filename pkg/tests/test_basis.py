from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, strategies as st

from difflin.basis import (
    EMPTY, UNIT, Atom, MSet, Tup, basis_enum, finite_basis, format_elem, join, matches, mset,
    parse_elem, split,
)
from difflin.errors import ParseError
from difflin.objects import I, parse_object as P

D2 = {"A": 2, "B": 1}


def test_multisets_are_unordered():
    a1, a2 = Atom("A", 1), Atom("A", 2)
    assert mset(a1, a2) == mset(a2, a1)
    assert mset(a1) + mset(a1, a2) == mset(a1, a1, a2)
    assert mset(a1, a1).counts()[a1] == 2
    assert EMPTY == MSet()


@pytest.mark.parametrize("cap", range(1, 7))
def test_bang_enumeration_counts(cap):
    # multisets of size n over 2 atoms: n + 1 of them; structural size is n + 1
    expected = sum(comb(n + 1, 1) for n in range(cap))
    assert len(basis_enum(P("!A"), {"A": 2}, cap)) == expected


def test_double_bang_small_cap():
    got = [format_elem(e, {"A": 1}) for e in basis_enum(P("!!A"), {"A": 1}, 3)]
    assert sorted(got) == sorted(["[]", "[[]]", "[[],[]]", "[[a]]"])


def test_enumeration_is_sorted_and_within_cap():
    es = basis_enum(P("!A * !B * A"), D2, 5)
    assert es == sorted(es)
    assert all(e.size <= 5 for e in es)
    assert len(set(es)) == len(es)


def test_finite_basis():
    assert finite_basis(P("A * B"), D2) == [Tup([Atom("A", 1), Atom("B", 1)]),
                                            Tup([Atom("A", 2), Atom("B", 1)])]
    assert finite_basis(I, D2) == [UNIT]


@given(st.sampled_from(basis_enum(P("!A * A * !B"), D2, 6)))
def test_literal_roundtrip(e):
    obj = P("!A * A * !B")
    assert parse_elem(format_elem(e, D2), obj, D2) == e
    assert matches(e, obj, D2)


@given(st.sampled_from(basis_enum(P("A * !A * B"), D2, 5)))
def test_split_join_inverse(e):
    objs = [P("A * !A"), P("B")]
    assert join(list(split(e, objs)), objs) == e


def test_literal_details():
    assert format_elem(Atom("A", 1), {"A": 1}) == "a"
    assert format_elem(Atom("A", 2), D2) == "a2"
    assert format_elem(UNIT) == "*"
    assert parse_elem("[a1,a1]", P("!A"), D2).size == 3
    with pytest.raises(ParseError):
        parse_elem("a3", P("A"), D2)
    with pytest.raises(ParseError):
        parse_elem("(a1,b)", P("!A"), D2)


def test_size_and_weight():
    e = parse_elem("([a1,a2],a1)", P("!A * A"), D2)
    assert e.size == 5
    assert e.weight == 3
