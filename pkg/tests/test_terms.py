from __future__ import annotations

import pytest
from hypothesis import given

from difflin.errors import ParseError, TypeCheckError, UnknownNameError
from difflin.objects import I, Bang, parse_object as P, tensor
from difflin.terms import (
    Comp, Gen, Id, Lin, Neg, Sum, ZeroMor, generator_type, infer_type, is_sum_free,
    parse_term, placeholders, pretty_print, substitute, uses_negatives,
)

from .strategies import A, chains

TYPES = {
    "eps{A}": ("!A", "A"),
    "weak{A}": ("!A", "I"),
    "eta{A}": ("A", "!A"),
    "u{A}": ("I", "!A"),
    "copy{A}": ("!A", "!A * !A"),
    "nabla{A}": ("!A * !A", "!A"),
    "delta{A}": ("!A", "!!A"),
    "m{A,B}": ("!A * !B", "!(A * B)"),
    "mI": ("I", "!I"),
    "d{A}": ("!A * A", "!A"),
    "S{A}": ("!A", "!A"),
    "sigma{A,B}": ("A * B", "B * A"),
    "bang(eta{A})": ("!A", "!!A"),
    "0 : A -> !B": ("A", "!B"),
}


@pytest.mark.parametrize("src", sorted(TYPES))
def test_generator_types(src):
    dom, cod = TYPES[src]
    assert infer_type(parse_term(src)) == (P(dom), P(cod))


def test_precedence():
    t = parse_term("eta{A} ; eps{A} + id{A}")
    assert isinstance(t, Sum)
    t = parse_term("eta{A} * id{B} ; eps{A} * id{B}")
    assert isinstance(t, Comp)
    t = parse_term("-eta{A} ; eps{A}")
    assert isinstance(t.parts[0], Neg)


@given(chains())
def test_pretty_print_roundtrip(t):
    assert parse_term(pretty_print(t)) == t


@pytest.mark.parametrize("src", [
    "eta{A} + eps{A} ; eta{A}", "-(eta{A} ; eps{A})", "(0 : A -> A) + id{A}",
    "bang(id{A} * eta{B}) ; m{A,!B}", "copy{A} ; nabla{A} * id{I}",
])
def test_pretty_print_roundtrip_fixed(src):
    t = parse_term(src)
    assert parse_term(pretty_print(t)) == t


def test_type_errors():
    with pytest.raises(TypeCheckError):
        infer_type(parse_term("eta{A} ; eta{A}"))
    with pytest.raises(TypeCheckError):
        infer_type(parse_term("eta{A} + id{A}"))
    with pytest.raises(UnknownNameError):
        parse_term("frob{A}")
    with pytest.raises(ParseError):
        parse_term("eta{A,B}")
    with pytest.raises(ParseError):
        parse_term("eta{A} ;")
    with pytest.raises(UnknownNameError):
        parse_term("lin f")


def test_predicates():
    assert is_sum_free(parse_term("eta{A} ; copy{A}"))
    assert not is_sum_free(parse_term("id{A} + id{A}"))
    assert uses_negatives(parse_term("S{A}"))
    assert uses_negatives(parse_term("-id{A}"))
    assert not uses_negatives(parse_term("copy{A} ; nabla{A}"))


def test_lin_and_placeholders():
    f = Lin("f", P("X"), P("Y"), placeholder=True)
    t = parse_term("eta{X} ; bang(lin f)", {"f": f})
    assert placeholders(t) == {"f"}
    g = Lin("g", A, A, ())
    s = substitute(t, {"X": A, "Y": A}, {"f": g})
    assert placeholders(s) == set()
    assert infer_type(s) == (A, Bang(A))
    assert uses_negatives(Lin("h", A, A, ((None, None, -1),)))


def test_generator_type_table():
    assert generator_type("m", (A, I)) == (tensor(Bang(A), Bang(I)), Bang(A))
    assert infer_type(ZeroMor(I, A)) == (I, A)
    assert infer_type(Id(I)) == (I, I)
    assert infer_type(Gen("mI", ())) == (I, Bang(I))
