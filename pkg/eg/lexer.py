"""Regex tokenizer shared by the Turtle and query readers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from eg.errors import ParseDiagnostic

LOCAL_NAME = r"[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?"
PREFIX_LABEL = r"[A-Za-z](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?"

LOCAL_RE = re.compile(LOCAL_NAME)
PREFIX_RE = re.compile(PREFIX_LABEL)

# Order matters: first alternative that matches wins.
_TOKEN_SPEC = [
    ("WS", r"[ \t\r\n]+"),
    ("COMMENT", r"#[^\r\n]*"),
    ("IRIREF", r"<[^<>\"{}|^`\\\s]*>"),
    ("BNODE", r"_:" + LOCAL_NAME),
    ("PNAME", rf"(?:{PREFIX_LABEL})?:(?:{LOCAL_NAME})?"),
    ("VAR", r"[?$][A-Za-z0-9_]+"),
    ("STRING", r"\"(?:[^\"\\\r\n]|\\[^\r\n])*\""),
    ("LANGTAG", r"@[A-Za-z]+(?:-[A-Za-z0-9]+)*"),
    ("DTYPE", r"\^\^"),
    ("DOUBLE", r"[+-]?(?:\d+\.\d*[eE][+-]?\d+|\.\d+[eE][+-]?\d+|\d+[eE][+-]?\d+)"),
    ("DECIMAL", r"[+-]?\d*\.\d+"),
    ("INTEGER", r"[+-]?\d+"),
    ("WORD", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("OP", r"<=|>=|!=|&&|[=<>]"),
    ("PUNCT", r"[.;,{}()\[\]*]"),
    ("ERROR", r"."),
]

_MASTER = re.compile("|".join(f"(?P<{name}>{rx})" for name, rx in _TOKEN_SPEC))

_SKIP = {"WS", "COMMENT"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int
    offset: int


def tokenize(text: str) -> Iterator[Token]:
    """Yield tokens, then a final EOF token.

    EOF carries the position of the last real token (1:1 for empty input) so
    every diagnostic points inside the text.
    """
    line, line_start = 1, 0
    last = Token("EOF", "", 1, 1, 0)
    for m in _MASTER.finditer(text):
        kind = m.lastgroup or "ERROR"
        start = m.start()
        if kind not in _SKIP:
            last = Token(kind, m.group(), line, start - line_start + 1, start)
            yield last
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = start + chunk.rfind("\n") + 1
    yield Token("EOF", "", last.line, last.col, last.offset)


class TokenStream:
    """One-token lookahead over ``tokenize`` output."""

    def __init__(self, text: str) -> None:
        self._tokens = list(tokenize(text))
        self._pos = 0

    def peek(self) -> Token:
        return self._tokens[self._pos]

    def next(self) -> Token:
        tok = self._tokens[self._pos]
        if tok.kind != "EOF":
            self._pos += 1
        return tok

    def at(self, kind: str, text: str | None = None) -> bool:
        tok = self.peek()
        return tok.kind == kind and (text is None or tok.text == text)

    def at_word(self, word: str) -> bool:
        """Case-insensitive keyword check."""
        tok = self.peek()
        return tok.kind == "WORD" and tok.text.upper() == word.upper()


def diagnostic(tok: Token, message: str) -> ParseDiagnostic:
    shown = tok.text if tok.kind != "EOF" else "end of input"
    return ParseDiagnostic(tok.line, tok.col, message, shown)


_ESCAPE_RE = re.compile(r"\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|.)")

_SIMPLE_ESCAPES = {
    "t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
    '"': '"', "'": "'", "\\": "\\",
}


def unescape(body: str) -> str:
    """Decode string escapes.

    Raises ValueError on an unknown escape or one naming a surrogate or a code
    point past U+10FFFF.
    """

    def repl(m: re.Match) -> str:
        code = m.group(1)
        if code[0] in "uU" and len(code) > 1:
            point = int(code[1:], 16)
            if 0xD800 <= point <= 0xDFFF or point > 0x10FFFF:
                raise ValueError(f"escape \\{code} is not a Unicode scalar value")
            return chr(point)
        if code in _SIMPLE_ESCAPES:
            return _SIMPLE_ESCAPES[code]
        raise ValueError(f"unknown escape sequence \\{code}")

    return _ESCAPE_RE.sub(repl, body)
