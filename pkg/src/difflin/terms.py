"""Typed morphism terms of the differential-linear-category signature.

Generators (``delta``, ``eps``, ``copy``, ``weak``, ``m``, ``mI``, ``nabla``,
``u``, ``eta``, ``d``, ``S``) are parameterized by objects.  Composition is
written in diagrammatic order: ``f ; g`` runs ``f`` first.

Text grammar::

    term := sum
    sum  := seq ("+" seq)*
    seq  := par (";" par)*
    par  := unary ("*" unary)*
    unary:= "-" unary | atom
    atom := id{obj} | sigma{obj,obj} | delta{obj} | ... | mI | bang(term)
          | lin NAME | "0" ":" obj "->" obj | "(" term ")"
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from ._lexer import TokenStream
from .errors import TypeCheckError, UnknownNameError
from .objects import Bang, I, ObjExpr, parse_object_from, substitute_object, tensor

#: generator kind -> number of object parameters
GENERATOR_ARITY: dict[str, int] = {
    "delta": 1, "eps": 1, "copy": 1, "weak": 1, "m": 2, "mI": 0,
    "nabla": 1, "u": 1, "eta": 1, "d": 1, "S": 1,
}


@dataclass(frozen=True)
class Id:
    obj: ObjExpr


@dataclass(frozen=True)
class Gen:
    kind: str
    params: tuple[ObjExpr, ...] = ()


@dataclass(frozen=True)
class Sym:
    left: ObjExpr
    right: ObjExpr


@dataclass(frozen=True)
class Comp:
    parts: tuple["MorTerm", ...]


@dataclass(frozen=True)
class Ten:
    parts: tuple["MorTerm", ...]


@dataclass(frozen=True)
class BangBox:
    inner: "MorTerm"


@dataclass(frozen=True)
class Sum:
    parts: tuple["MorTerm", ...]


@dataclass(frozen=True)
class Neg:
    inner: "MorTerm"


@dataclass(frozen=True)
class ZeroMor:
    dom: ObjExpr
    cod: ObjExpr


@dataclass(frozen=True)
class Lin:
    """An explicit linear map given by its nonzero matrix entries.

    ``entries`` holds ``(in_elem, out_elem, coefficient)`` triples with exact
    rational coefficients; they are converted into the evaluation semiring when
    the term is evaluated.  A ``Lin`` with no entries and ``placeholder=True``
    stands for a morphism metavariable inside an axiom schema.
    """

    name: str
    dom: ObjExpr
    cod: ObjExpr
    entries: tuple = ()
    placeholder: bool = field(default=False, compare=True)


MorTerm = Union[Id, Gen, Sym, Comp, Ten, BangBox, Sum, Neg, ZeroMor, Lin]


# -- smart constructors -------------------------------------------------------


def gen(kind: str, *params: ObjExpr) -> Gen:
    if kind not in GENERATOR_ARITY:
        raise UnknownNameError(f"unknown generator {kind!r}")
    if len(params) != GENERATOR_ARITY[kind]:
        raise TypeCheckError(f"{kind} takes {GENERATOR_ARITY[kind]} object parameter(s)")
    return Gen(kind, tuple(params))


def comp(*parts: MorTerm) -> MorTerm:
    """Diagrammatic composite; a single part is returned unchanged."""
    if len(parts) == 1:
        return parts[0]
    return Comp(tuple(parts))


def ten(*parts: MorTerm) -> MorTerm:
    if len(parts) == 1:
        return parts[0]
    return Ten(tuple(parts))


def plus(*parts: MorTerm) -> MorTerm:
    if len(parts) == 1:
        return parts[0]
    return Sum(tuple(parts))


def idm(obj: ObjExpr) -> Id:
    return Id(obj)


# -- typing -------------------------------------------------------------------


def generator_type(kind: str, params: tuple[ObjExpr, ...]) -> tuple[ObjExpr, ObjExpr]:
    if kind == "mI":
        return I, Bang(I)
    a = params[0]
    ba = Bang(a)
    if kind == "delta":
        return ba, Bang(ba)
    if kind == "eps":
        return ba, a
    if kind == "copy":
        return ba, tensor(ba, ba)
    if kind == "weak":
        return ba, I
    if kind == "m":
        b = params[1]
        return tensor(ba, Bang(b)), Bang(tensor(a, b))
    if kind == "nabla":
        return tensor(ba, ba), ba
    if kind == "u":
        return I, ba
    if kind == "eta":
        return a, ba
    if kind == "d":
        return tensor(ba, a), ba
    if kind == "S":
        return ba, ba
    raise UnknownNameError(f"unknown generator {kind!r}")


@lru_cache(maxsize=65536)
def infer_type(t: MorTerm) -> tuple[ObjExpr, ObjExpr]:
    """Return the normalized ``(dom, cod)`` of a term or raise TypeCheckError."""
    if isinstance(t, Id):
        return t.obj, t.obj
    if isinstance(t, Gen):
        if len(t.params) != GENERATOR_ARITY.get(t.kind, -1):
            raise TypeCheckError(f"generator {t.kind} has wrong number of parameters")
        return generator_type(t.kind, t.params)
    if isinstance(t, Sym):
        return tensor(t.left, t.right), tensor(t.right, t.left)
    if isinstance(t, Comp):
        if not t.parts:
            raise TypeCheckError("empty composite")
        dom, cod = infer_type(t.parts[0])
        for k, p in enumerate(t.parts[1:], start=1):
            pd, pc = infer_type(p)
            if pd != cod:
                raise TypeCheckError(
                    f"composition mismatch at part {k}: {pretty_print(t.parts[k - 1])} "
                    f"ends in {cod} but {pretty_print(p)} starts at {pd}")
            cod = pc
        return dom, cod
    if isinstance(t, Ten):
        types = [infer_type(p) for p in t.parts]
        return tensor(*(d for d, _ in types)), tensor(*(c for _, c in types))
    if isinstance(t, BangBox):
        d, c = infer_type(t.inner)
        return Bang(d), Bang(c)
    if isinstance(t, Sum):
        if not t.parts:
            raise TypeCheckError("empty sum")
        types = {infer_type(p) for p in t.parts}
        if len(types) != 1:
            shown = ", ".join(f"{d} -> {c}" for d, c in types)
            raise TypeCheckError(f"sum of morphisms with different types: {shown}")
        return types.pop()
    if isinstance(t, Neg):
        return infer_type(t.inner)
    if isinstance(t, ZeroMor):
        return t.dom, t.cod
    if isinstance(t, Lin):
        return t.dom, t.cod
    raise TypeCheckError(f"not a term: {t!r}")


def annotate(t: MorTerm) -> Iterator[tuple[MorTerm, ObjExpr, ObjExpr]]:
    """Yield every subterm (preorder) together with its type."""
    dom, cod = infer_type(t)
    yield t, dom, cod
    for child in children(t):
        yield from annotate(child)


def children(t: MorTerm) -> tuple[MorTerm, ...]:
    if isinstance(t, (Comp, Ten, Sum)):
        return t.parts
    if isinstance(t, (BangBox, Neg)):
        return (t.inner,)
    return ()


def is_sum_free(t: MorTerm) -> bool:
    if isinstance(t, (Sum, Neg, ZeroMor)):
        return False
    return all(is_sum_free(c) for c in children(t))


def uses_negatives(t: MorTerm) -> bool:
    """True when evaluating ``t`` needs additive inverses (``S`` or negation)."""
    if isinstance(t, Neg):
        return True
    if isinstance(t, Gen) and t.kind == "S":
        return True
    if isinstance(t, Lin):
        return any(Fraction(c) < 0 for _, _, c in t.entries)
    return any(uses_negatives(c) for c in children(t))


def placeholders(t: MorTerm) -> set[str]:
    if isinstance(t, Lin) and t.placeholder:
        return {t.name}
    out: set[str] = set()
    for c in children(t):
        out |= placeholders(c)
    return out


def substitute(t: MorTerm, objects: Mapping[str, ObjExpr] | None = None,
               morphisms: Mapping[str, MorTerm] | None = None) -> MorTerm:
    """Instantiate object metavariables (base names) and placeholder ``Lin`` maps."""
    objects = objects or {}
    morphisms = morphisms or {}

    def obj(o):
        return substitute_object(o, objects) if objects else o

    def go(t):
        if isinstance(t, Lin):
            if t.placeholder and t.name in morphisms:
                return morphisms[t.name]
            return Lin(t.name, obj(t.dom), obj(t.cod), t.entries, t.placeholder)
        if isinstance(t, Id):
            return Id(obj(t.obj))
        if isinstance(t, Gen):
            return Gen(t.kind, tuple(obj(p) for p in t.params))
        if isinstance(t, Sym):
            return Sym(obj(t.left), obj(t.right))
        if isinstance(t, Comp):
            return Comp(tuple(go(p) for p in t.parts))
        if isinstance(t, Ten):
            return Ten(tuple(go(p) for p in t.parts))
        if isinstance(t, Sum):
            return Sum(tuple(go(p) for p in t.parts))
        if isinstance(t, BangBox):
            return BangBox(go(t.inner))
        if isinstance(t, Neg):
            return Neg(go(t.inner))
        if isinstance(t, ZeroMor):
            return ZeroMor(obj(t.dom), obj(t.cod))
        raise TypeCheckError(f"not a term: {t!r}")

    return go(t)


# -- parsing ------------------------------------------------------------------


def parse_term(src: str, lins: Mapping[str, Lin] | None = None, bases=None) -> MorTerm:
    """Parse the term grammar.  ``lins`` resolves ``lin NAME`` atoms.

    >>> parse_term("eta{A} ; eps{A}")
    Comp(parts=(Gen(kind='eta', params=(Base(name='A'),)), Gen(kind='eps', params=(Base(name='A'),))))
    """
    ts = TokenStream(src)
    t = _Parser(ts, lins or {}, bases).term()
    ts.expect_eof()
    return t


class _Parser:
    def __init__(self, ts: TokenStream, lins: Mapping[str, Lin], bases):
        self.ts = ts
        self.lins = lins
        self.bases = bases

    def term(self) -> MorTerm:
        parts = [self.seq()]
        while self.ts.accept("+"):
            parts.append(self.seq())
        return plus(*parts)

    def seq(self) -> MorTerm:
        parts = [self.par()]
        while self.ts.accept(";"):
            parts.append(self.par())
        return comp(*parts)

    def par(self) -> MorTerm:
        parts = [self.unary()]
        while self.ts.accept("*"):
            parts.append(self.unary())
        return ten(*parts)

    def unary(self) -> MorTerm:
        if self.ts.accept("-"):
            return Neg(self.unary())
        return self.atom()

    def obj(self) -> ObjExpr:
        return parse_object_from(self.ts, self.bases)

    def braced_objs(self, n: int, kind: str) -> tuple[ObjExpr, ...]:
        ts = self.ts
        ts.expect("{")
        objs = [self.obj()]
        while ts.accept(","):
            objs.append(self.obj())
        ts.expect("}")
        if len(objs) != n:
            ts.error(f"{kind} expects {n} object parameter(s), got {len(objs)}")
        return tuple(objs)

    def atom(self) -> MorTerm:
        ts = self.ts
        tok = ts.peek
        if ts.accept("("):
            t = self.term()
            ts.expect(")")
            return t
        if tok.kind == "num":
            if tok.text != "0":
                ts.error("only the literal 0 may start a term")
            ts.next()
            ts.expect(":")
            dom = self.obj()
            ts.expect("->")
            cod = self.obj()
            return ZeroMor(dom, cod)
        if tok.kind != "ident":
            ts.error(f"expected a term, found {tok.text or 'end of input'!r}")
        ts.next()
        name = tok.text
        if name == "id":
            return Id(self.braced_objs(1, name)[0])
        if name == "sigma":
            left, right = self.braced_objs(2, name)
            return Sym(left, right)
        if name == "bang":
            ts.expect("(")
            inner = self.term()
            ts.expect(")")
            return BangBox(inner)
        if name == "lin":
            ref = ts.expect_ident()
            if ref.text not in self.lins:
                raise UnknownNameError(f"unknown lin map {ref.text!r} at position {ref.pos}")
            return self.lins[ref.text]
        if name == "mI":
            return Gen("mI", ())
        if name in GENERATOR_ARITY:
            return Gen(name, self.braced_objs(GENERATOR_ARITY[name], name))
        raise UnknownNameError(f"unknown generator {name!r} at position {tok.pos}")


# -- printing -----------------------------------------------------------------

_LEVEL = {Sum: 0, Comp: 1, Ten: 2}


def pretty_print(t: MorTerm) -> str:
    """Render a term in the text grammar; parsing the result gives back ``t``."""
    return _pp(t, 0)


def _pp(t: MorTerm, ctx: int) -> str:
    # ctx: 0 = top/sum operand, 1 = seq operand, 2 = par operand, 3 = unary operand
    if isinstance(t, Sum):
        s = " + ".join(_pp(p, 1) for p in t.parts)
        return s if ctx <= 0 else f"({s})"
    if isinstance(t, Comp):
        s = " ; ".join(_pp(p, 2) for p in t.parts)
        return s if ctx <= 1 else f"({s})"
    if isinstance(t, Ten):
        s = " * ".join(_pp(p, 3) for p in t.parts)
        return s if ctx <= 2 else f"({s})"
    if isinstance(t, Neg):
        return "-" + _pp(t.inner, 3)
    if isinstance(t, ZeroMor):
        s = f"0 : {t.dom} -> {t.cod}"
        return s if ctx == 0 else f"({s})"
    if isinstance(t, Id):
        return f"id{{{t.obj}}}"
    if isinstance(t, Sym):
        return f"sigma{{{t.left},{t.right}}}"
    if isinstance(t, Gen):
        if t.kind == "mI":
            return "mI"
        return f"{t.kind}{{{','.join(str(p) for p in t.params)}}}"
    if isinstance(t, BangBox):
        return f"bang({_pp(t.inner, 0)})"
    if isinstance(t, Lin):
        return f"lin {t.name}"
    raise TypeCheckError(f"not a term: {t!r}")


__all__ = [
    "BangBox", "Comp", "Gen", "GENERATOR_ARITY", "Id", "Lin", "MorTerm", "Neg", "Sum",
    "Sym", "Ten", "ZeroMor", "annotate", "comp", "gen", "infer_type", "is_sum_free",
    "parse_term", "placeholders", "plus", "pretty_print", "substitute", "ten",
    "uses_negatives",
]
