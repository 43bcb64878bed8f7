"""Term files: declarations of base objects, explicit linear maps, terms and
model settings, one per line (``#`` starts a comment)::

    semiring rational
    base A dim 2
    lin f : A -> A { a1->a1: 2, a1->a2: -1/2 }
    let lhs = eta{A} ; bang(lin f) ; eps{A}
    size_cap 4

A ``lin`` body may continue over several lines until its closing brace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ._lexer import TokenStream
from .basis import parse_elem_from
from .errors import ParseError, UnknownNameError
from .objects import parse_object_from
from .semiring import Semiring, get_semiring
from .terms import Lin, MorTerm, infer_type, parse_term


@dataclass
class TermFile:
    dims: dict[str, int] = field(default_factory=dict)
    lins: dict[str, Lin] = field(default_factory=dict)
    lets: dict[str, MorTerm] = field(default_factory=dict)
    semiring: str | None = None
    size_cap: int | None = None
    fallback_cap: int | None = None

    @property
    def ring(self) -> Semiring | None:
        return None if self.semiring is None else get_semiring(self.semiring)

    def main_term(self) -> MorTerm:
        """The term named ``main`` if present, otherwise the last ``let``."""
        if not self.lets:
            raise UnknownNameError("the term file declares no 'let' term")
        if "main" in self.lets:
            return self.lets["main"]
        return list(self.lets.values())[-1]


def _logical_lines(src: str):
    """Join physical lines while a ``{`` is still open."""
    buf: list[str] = []
    start = depth = 0
    for lineno, raw in enumerate(src.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not buf:
            start = lineno
        buf.append(line)
        depth += line.count("{") - line.count("}")
        if depth <= 0:
            text = " ".join(buf).strip()
            buf, depth = [], 0
            if text:
                yield start, text
    if buf and " ".join(buf).strip():
        yield start, " ".join(buf).strip()


def parse_termfile(src: str, dims: dict[str, int] | None = None) -> TermFile:
    """Parse a term file; ``dims`` supplies base dimensions not declared in the file."""
    tf = TermFile(dims=dict(dims or {}))
    for lineno, text in _logical_lines(src):
        try:
            _parse_decl(tf, text)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        except UnknownNameError as exc:
            raise UnknownNameError(f"line {lineno}: {exc}") from None
    return tf


def load_termfile(path: str | Path, dims: dict[str, int] | None = None) -> TermFile:
    return parse_termfile(Path(path).read_text(encoding="utf-8"), dims)


def _parse_decl(tf: TermFile, text: str) -> None:
    ts = TokenStream(text)
    head = ts.expect_ident().text
    if head == "base":
        name = ts.expect_ident().text
        kw = ts.expect_ident()
        if kw.text != "dim":
            ts.error("expected 'dim'")
        tf.dims[name] = _nat(ts)
    elif head == "semiring":
        tf.semiring = get_semiring(ts.expect_ident().text).name
    elif head == "size_cap":
        tf.size_cap = _nat(ts)
    elif head == "fallback_cap":
        tf.fallback_cap = _nat(ts)
    elif head == "lin":
        lin = _parse_lin(ts, tf)
        tf.lins[lin.name] = lin
        ts.expect_eof()
        return
    elif head == "let":
        name = ts.expect_ident().text
        ts.expect("=")
        body = text[ts.peek.pos:]
        term = parse_term(body, tf.lins, tf.dims.keys())
        infer_type(term)
        tf.lets[name] = term
        return
    else:
        raise ParseError(f"unknown declaration {head!r}", 0, text)
    ts.expect_eof()


def _nat(ts: TokenStream) -> int:
    tok = ts.peek
    if tok.kind != "num":
        ts.error("expected a natural number")
    ts.next()
    return int(tok.text)


def parse_coefficient(ts: TokenStream) -> Fraction:
    neg = ts.accept("-")
    tok = ts.peek
    if tok.kind != "num":
        ts.error("expected a coefficient")
    ts.next()
    value = Fraction(int(tok.text))
    if ts.accept("/"):
        den = ts.peek
        if den.kind != "num" or int(den.text) == 0:
            ts.error("expected a nonzero denominator")
        ts.next()
        value /= int(den.text)
    return -value if neg else value


def _parse_lin(ts: TokenStream, tf: TermFile) -> Lin:
    name = ts.expect_ident().text
    ts.expect(":")
    dom = parse_object_from(ts, tf.dims.keys())
    ts.expect("->")
    cod = parse_object_from(ts, tf.dims.keys())
    ts.expect("{")
    entries = []
    if not ts.at("}"):
        while True:
            i = parse_elem_from(ts, dom, tf.dims)
            ts.expect("->")
            o = parse_elem_from(ts, cod, tf.dims)
            ts.expect(":")
            c = parse_coefficient(ts)
            entries.append((i, o, c))
            if not ts.accept(","):
                break
    ts.expect("}")
    return Lin(name, dom, cod, tuple(entries))


__all__ = ["TermFile", "load_termfile", "parse_coefficient", "parse_termfile"]
