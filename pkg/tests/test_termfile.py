from __future__ import annotations

from fractions import Fraction

import pytest

from difflin.basis import Atom
from difflin.errors import ParseError, TypeCheckError, UnknownNameError
from difflin.model import Model
from difflin.termfile import parse_termfile

SRC = """
# two-dimensional base with an explicit map
semiring integer
base A dim 2
size_cap 3
fallback_cap 5
lin f : A -> A {
  a1 -> a2 : 2,
  a2 -> a1 : -1
}
let lhs = eta{A} ; bang(lin f) ; eps{A}
let rhs = lin f
"""


def test_parse_full_file():
    tf = parse_termfile(SRC)
    assert tf.dims == {"A": 2}
    assert tf.semiring == "integer"
    assert tf.size_cap == 3 and tf.fallback_cap == 5
    f = tf.lins["f"]
    assert f.entries == ((Atom("A", 1), Atom("A", 2), Fraction(2)),
                         (Atom("A", 2), Atom("A", 1), Fraction(-1)))
    assert tf.main_term() is tf.lets["rhs"]
    model = Model(tf.ring, tf.dims)
    assert model.equal_upto(tf.lets["lhs"], tf.lets["rhs"], 4)


def test_main_wins():
    tf = parse_termfile("base A dim 1\nlet main = id{A}\nlet other = eta{A}\n")
    assert str(tf.main_term()) == str(tf.lets["main"])


@pytest.mark.parametrize("src, err, line", [
    ("base A dim 1\nlet x = eta{B}\n", UnknownNameError, 2),
    ("base A dim 1\nlet x = eta{A} ;\n", ParseError, 2),
    ("frobnicate\n", ParseError, 1),
    ("base A dim 1\n\nlin f : A -> A { a -> a : 1/0 }\n", ParseError, 3),
])
def test_errors_carry_line_numbers(src, err, line):
    with pytest.raises(err) as info:
        parse_termfile(src)
    assert f"line {line}" in str(info.value)


def test_ill_typed_let():
    with pytest.raises(TypeCheckError):
        parse_termfile("base A dim 1\nlet x = eta{A} ; eta{A}\n")


def test_external_dims():
    tf = parse_termfile("let x = copy{A}\n", {"A": 3})
    assert tf.dims == {"A": 3}
