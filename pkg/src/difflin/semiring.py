"""Commutative semirings of coefficients.

Four exact semirings are provided: rationals, integers, naturals and the
Boolean semiring.  Only the first two have additive inverses.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .errors import SemiringError


class Semiring:
    """Exact commutative semiring with a canonical embedding of the naturals."""

    id: str = ""
    name: str = ""
    has_negatives: bool = False
    idempotent_add: bool = False
    zero: Any = 0
    one: Any = 1

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        raise SemiringError(f"semiring {self.name} has no negatives")

    def nat(self, n: int):
        """Image of the natural number ``n``."""
        return n

    def sign(self, k: int):
        """``(-1)**k``; only defined when the semiring has negatives."""
        if k % 2 == 0:
            return self.one
        return self.neg(self.one)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_literal(self, value: Fraction | int | str):
        q = Fraction(value)
        return self._from_fraction(q)

    def _from_fraction(self, q: Fraction):
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)

    def to_json(self, a):
        return self.fmt(a)

    def __repr__(self) -> str:
        return f"<Semiring {self.name}>"


class Rational(Semiring):
    id = "RatExact"
    name = "rational"
    has_negatives = True
    zero = Fraction(0)
    one = Fraction(1)

    def neg(self, a):
        return -a

    def nat(self, n: int):
        return Fraction(n)

    def _from_fraction(self, q: Fraction):
        return q

    def fmt(self, a) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"


class Integer(Semiring):
    id = "IntExact"
    name = "integer"
    has_negatives = True

    def neg(self, a):
        return -a

    def _from_fraction(self, q: Fraction):
        if q.denominator != 1:
            raise SemiringError(f"{q} is not an integer")
        return q.numerator


class Natural(Semiring):
    id = "Nat"
    name = "natural"

    def _from_fraction(self, q: Fraction):
        if q.denominator != 1 or q < 0:
            raise SemiringError(f"{q} is not a natural number")
        return q.numerator


class Boolean(Semiring):
    id = "Boolean"
    name = "boolean"
    idempotent_add = True
    zero = False
    one = True

    def add(self, a, b):
        return a or b

    def mul(self, a, b):
        return a and b

    def nat(self, n: int):
        return n >= 1

    def _from_fraction(self, q: Fraction):
        if q.denominator != 1 or q < 0:
            raise SemiringError(f"{q} is not a natural number")
        return self.nat(q.numerator)

    def fmt(self, a) -> str:
        return "1" if a else "0"


RATIONAL = Rational()
INTEGER = Integer()
NATURAL = Natural()
BOOLEAN = Boolean()

SEMIRINGS: dict[str, Semiring] = {s.name: s for s in (RATIONAL, INTEGER, NATURAL, BOOLEAN)}


def get_semiring(name: str) -> Semiring:
    key = name.lower()
    aliases = {"q": "rational", "rat": "rational", "ratexact": "rational",
               "z": "integer", "int": "integer", "intexact": "integer",
               "n": "natural", "nat": "natural", "bool": "boolean", "b": "boolean"}
    key = aliases.get(key, key)
    try:
        return SEMIRINGS[key]
    except KeyError:
        raise SemiringError(f"unknown semiring {name!r}; choose from {sorted(SEMIRINGS)}") from None
