"""Object expressions: base objects, the tensor unit, tensors and ``!``.

Objects are kept in strict-monoidal normal form: tensors are flattened, never
contain the unit, and always have at least two factors.  Use :func:`tensor`
and :func:`bang` rather than the raw constructors to stay normalized.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Union

from ._lexer import TokenStream
from .errors import UnknownNameError


@dataclass(frozen=True)
class Base:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Unit:
    def __str__(self) -> str:
        return "I"


@dataclass(frozen=True)
class Tensor:
    factors: tuple["ObjExpr", ...]

    def __str__(self) -> str:
        return " * ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class Bang:
    inner: "ObjExpr"

    def __str__(self) -> str:
        if isinstance(self.inner, Tensor):
            return f"!({self.inner})"
        return f"!{self.inner}"


ObjExpr = Union[Base, Unit, Tensor, Bang]

I = Unit()


def factors(obj: ObjExpr) -> tuple[ObjExpr, ...]:
    """The tensor factors of a normalized object (empty for the unit)."""
    if isinstance(obj, Unit):
        return ()
    if isinstance(obj, Tensor):
        return obj.factors
    return (obj,)


def tensor(*objs: ObjExpr) -> ObjExpr:
    flat: list[ObjExpr] = []
    for o in objs:
        flat.extend(factors(o))
    if not flat:
        return I
    if len(flat) == 1:
        return flat[0]
    return Tensor(tuple(flat))


def bang(obj: ObjExpr) -> ObjExpr:
    return Bang(obj)


def normalize(obj: ObjExpr) -> ObjExpr:
    """Normalize an object built with the raw constructors."""
    if isinstance(obj, Tensor):
        return tensor(*(normalize(f) for f in obj.factors))
    if isinstance(obj, Bang):
        return Bang(normalize(obj.inner))
    return obj


def base_names(obj: ObjExpr) -> set[str]:
    if isinstance(obj, Base):
        return {obj.name}
    if isinstance(obj, Tensor):
        return set().union(*(base_names(f) for f in obj.factors))
    if isinstance(obj, Bang):
        return base_names(obj.inner)
    return set()


def has_bang(obj: ObjExpr) -> bool:
    if isinstance(obj, Bang):
        return True
    if isinstance(obj, Tensor):
        return any(has_bang(f) for f in obj.factors)
    return False


def substitute_object(obj: ObjExpr, mapping: dict[str, ObjExpr]) -> ObjExpr:
    """Replace base objects by name; the result is re-normalized."""
    if isinstance(obj, Base):
        return mapping.get(obj.name, obj)
    if isinstance(obj, Tensor):
        return tensor(*(substitute_object(f, mapping) for f in obj.factors))
    if isinstance(obj, Bang):
        return Bang(substitute_object(obj.inner, mapping))
    return obj


# -- parsing ---------------------------------------------------------------


def parse_object_from(ts: TokenStream, bases: Iterable[str] | None = None) -> ObjExpr:
    allowed = None if bases is None else set(bases)
    parts = [_parse_prefix(ts, allowed)]
    while ts.at("*"):
        ts.next()
        parts.append(_parse_prefix(ts, allowed))
    return tensor(*parts)


def _parse_prefix(ts: TokenStream, allowed: set[str] | None) -> ObjExpr:
    if ts.accept("!"):
        return Bang(_parse_prefix(ts, allowed))
    if ts.accept("("):
        inner = parse_object_from(ts, allowed)
        ts.expect(")")
        return inner
    tok = ts.peek
    if tok.kind != "ident":
        ts.error(f"expected object, found {tok.text or 'end of input'!r}")
    ts.next()
    if tok.text == "I":
        return I
    if allowed is not None and tok.text not in allowed:
        raise UnknownNameError(f"unknown base object {tok.text!r} at position {tok.pos}")
    return Base(tok.text)


def parse_object(src: str, bases: Iterable[str] | None = None) -> ObjExpr:
    """Parse ``obj := IDENT | "I" | obj "*" obj | "!" obj | "(" obj ")"``.

    ``bases`` restricts the accepted base names; ``None`` accepts any
    identifier.  The result is normalized.

    >>> str(parse_object("!A * I"))
    '!A'
    >>> str(parse_object("!(A*B)"))
    '!(A * B)'
    """
    ts = TokenStream(src)
    obj = parse_object_from(ts, bases)
    ts.expect_eof()
    return obj
