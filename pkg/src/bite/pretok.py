"""Whitespace-and-punctuation pretokenizer.

Splits raw text into word tokens and single-character punctuation tokens.
Whitespace (any Unicode whitespace) separates tokens and is dropped; every
punctuation or symbol character (Unicode categories P* and S*, which include
all ASCII punctuation) becomes its own token. No normalization is applied,
so token byte offsets index the original text exactly.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass


def is_punct_char(ch: str) -> bool:
    """True for single characters in the splitting class (categories P*/S*)."""
    return len(ch) == 1 and unicodedata.category(ch)[0] in ("P", "S")


@dataclass(frozen=True)
class WordToken:
    """A pretokenized surface unit with its byte span in the source text."""

    surface: str
    byte_span: tuple[int, int]
    is_punct: bool

    def __post_init__(self):
        if not self.surface:
            raise ValueError("WordToken surface must be non-empty")


def pretokenize(text: str) -> list[WordToken]:
    """Split ``text`` into word and punctuation tokens.

    Deterministic; empty input yields an empty list. Concatenating the
    surfaces with single spaces reproduces the non-whitespace content.
    """
    tokens: list[WordToken] = []
    buf: list[str] = []
    buf_start = 0
    pos = 0  # byte offset into the UTF-8 encoding of text

    def flush(end: int):
        if buf:
            tokens.append(WordToken("".join(buf), (buf_start, end), False))
            buf.clear()

    for ch in text:
        nbytes = len(ch.encode("utf-8"))
        if ch.isspace():
            flush(pos)
        elif is_punct_char(ch):
            flush(pos)
            tokens.append(WordToken(ch, (pos, pos + nbytes), True))
        else:
            if not buf:
                buf_start = pos
            buf.append(ch)
        pos += nbytes
    flush(pos)
    return tokens


def surfaces(tokens: list[WordToken]) -> list[str]:
    return [t.surface for t in tokens]
