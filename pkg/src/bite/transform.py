"""The base-inflection transform and its inverse.

Encoding walks a tagged sentence left to right. Content words (common
nouns, verbs, adjectives) are reduced to their base form, followed by a
bracketed inflection symbol ("[VBD]") when the word was inflected;
everything else passes through unchanged. In ablated mode every inflection
symbol is replaced by the single dummy symbol "[INFL]", which removes the
grammatical information and makes the encoding non-invertible.

Decoding reattaches each inflection symbol to the base form immediately
before it and reinflects via the lexicon.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .morph import MorphLexicon
from .pretok import is_punct_char
from .tagger import TaggedToken
from .tags import CONTENT_TAGS, INFLECTION_TAGS

DUMMY_SYMBOL = "[INFL]"
INFLECTION_SYMBOLS = tuple(f"[{tag}]" for tag in INFLECTION_TAGS)
_SYMBOL_TO_TAG = {f"[{tag}]": tag for tag in INFLECTION_TAGS}

MODES = ("off", "standard", "ablated")


class MalformedSequenceError(ValueError):
    """An inflection symbol with no base form in front of it."""


class NonInvertibleError(ValueError):
    """Decoding input produced by the ablated (dummy-symbol) mode."""


@dataclass(frozen=True)
class BiteSymbol:
    kind: str  # base | inflection | dummy | pass
    text: str


def classify_symbol(text: str) -> str:
    """Symbol kind from its surface; bracketed tags are reserved."""
    if text == DUMMY_SYMBOL:
        return "dummy"
    if text in _SYMBOL_TO_TAG:
        return "inflection"
    return "pass"


def encode(
    tokens: Sequence[TaggedToken],
    mode: str = "standard",
    lexicon: MorphLexicon | None = None,
) -> list[BiteSymbol]:
    """Base-inflection encode a tagged sentence.

    Output grows by exactly one symbol per inflected content word, so
    len(tokens) <= len(result) <= 2*len(tokens).
    """
    if mode not in ("standard", "ablated"):
        raise ValueError(f"mode must be 'standard' or 'ablated', got {mode!r}")
    lex = lexicon or MorphLexicon.default()
    out: list[BiteSymbol] = []
    for token in tokens:
        if token.tag in CONTENT_TAGS:
            base = lex.lemmatize(token.surface, token.tag)
            inflection = lex.inflection_of(token.surface, token.tag)
            out.append(BiteSymbol("base", base))
            if inflection is not None:
                if mode == "ablated":
                    out.append(BiteSymbol("dummy", DUMMY_SYMBOL))
                else:
                    out.append(BiteSymbol("inflection", f"[{inflection}]"))
        else:
            out.append(BiteSymbol("pass", token.surface))
    return out


def decode(
    symbols: Iterable[BiteSymbol | str],
    lexicon: MorphLexicon | None = None,
) -> list[str]:
    """Invert :func:`encode`: reinflect each base form carrying a symbol.

    Plain strings are classified by surface shape, so the streaming text
    protocol can feed symbol sequences directly.
    """
    lex = lexicon or MorphLexicon.default()
    out: list[str] = []
    can_inflect = False  # True when out[-1] is a reinflectable base/word
    for pos, sym in enumerate(symbols):
        if isinstance(sym, str):
            sym = BiteSymbol(classify_symbol(sym), sym)
        if sym.kind == "dummy":
            raise NonInvertibleError(
                f"dummy symbol {DUMMY_SYMBOL} at position {pos}: "
                "ablated encodings cannot be decoded"
            )
        if sym.kind == "inflection":
            if not can_inflect:
                raise MalformedSequenceError(
                    f"inflection symbol {sym.text} at position {pos} "
                    "does not follow a base form"
                )
            out[-1] = lex.inflect(out[-1], _SYMBOL_TO_TAG[sym.text])
            can_inflect = False
        else:
            out.append(sym.text)
            can_inflect = True
    return out


def detokenize(surfaces: Iterable[str]) -> str:
    """Single space between tokens, none before punctuation (lossy)."""
    pieces: list[str] = []
    for s in surfaces:
        if pieces and not (len(s) == 1 and is_punct_char(s)):
            pieces.append(" ")
        pieces.append(s)
    return "".join(pieces)


def symbol_texts(symbols: Iterable[BiteSymbol]) -> list[str]:
    return [s.text for s in symbols]
