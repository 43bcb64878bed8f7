from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from difflin.errors import ParseError, UnknownNameError
from difflin.objects import (
    I, Bang, Base, Tensor, bang, base_names, factors, has_bang, normalize, parse_object,
    substitute_object, tensor,
)

A, B = Base("A"), Base("B")

objects = st.recursive(
    st.sampled_from([A, B, I]),
    lambda inner: st.one_of(
        st.builds(bang, inner),
        st.lists(inner, min_size=2, max_size=3).map(lambda xs: tensor(*xs)),
    ),
    max_leaves=6,
)


def test_parse_basic():
    assert parse_object("A") == A
    assert parse_object("I") == I
    assert parse_object("!A") == Bang(A)
    assert parse_object("!!A") == Bang(Bang(A))
    assert parse_object("A * B") == Tensor((A, B))
    assert parse_object("!(A * B)") == Bang(Tensor((A, B)))


def test_tensor_is_flat_and_unit_free():
    assert tensor(A, tensor(B, A)) == Tensor((A, B, A))
    assert tensor(A, I) == A
    assert tensor() == I
    assert factors(tensor(A, B)) == (A, B)
    assert factors(I) == ()


def test_bang_binds_tighter_than_tensor():
    assert parse_object("!A * B") == Tensor((Bang(A), B))


@given(objects)
def test_print_parse_roundtrip(obj):
    assert parse_object(str(obj)) == obj
    assert normalize(obj) == obj


def test_helpers():
    obj = parse_object("!(A * !B) * I")
    assert base_names(obj) == {"A", "B"}
    assert has_bang(obj)
    assert not has_bang(parse_object("A * B"))
    assert substitute_object(parse_object("!X * Y"), {"X": A, "Y": I}) == Bang(A)


def test_errors():
    with pytest.raises(ParseError):
        parse_object("A *")
    with pytest.raises(ParseError):
        parse_object("(A")
    with pytest.raises(UnknownNameError):
        parse_object("C", bases={"A", "B"})
