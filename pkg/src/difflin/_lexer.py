from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<arrow>->)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[*!();+\-{},:\[\]=/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident', 'num', 'arrow', 'punct', 'eof'
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos, src)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(src)))
    return tokens


class TokenStream:
    """Cursor over a token list with the small helpers the recursive-descent parsers use."""

    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def peek_at(self, offset: int) -> Token:
        j = min(self.i + offset, len(self.tokens) - 1)
        return self.tokens[j]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek
        return tok.kind != "eof" and tok.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.peek
        if tok.kind == "eof" or tok.text != text:
            self.error(f"expected {text!r}, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok

    def expect_ident(self) -> Token:
        tok = self.peek
        if tok.kind != "ident":
            self.error(f"expected identifier, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok

    def expect_eof(self) -> None:
        if self.peek.kind != "eof":
            self.error(f"unexpected {self.peek.text!r}")

    def error(self, message: str):
        raise ParseError(message, self.peek.pos, self.src)
