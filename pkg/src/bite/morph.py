"""Lemmatization and reinflection: dictionary look-up backed by suffix rules.

The lexicon is two TSV tables shipped with the package:

* ``lemmas.tsv`` -- ``surface<TAB>tag<TAB>lemma``: inflected surface form to
  base form, keyed by PTB tag.
* ``inflections.tsv`` -- ``lemma<TAB>tag<TAB>surface<TAB>rank``: base form to
  inflected surface. When a (lemma, tag) pair has several valid surfaces
  (overabundance, e.g. be+VBD -> was/were), rank orders them and rank 1 is the
  canonical decode choice.

Both files are UTF-8, one record per line, ``#`` starts a comment line.
Dictionary misses fall back to ordered suffix rules; a rule result is
accepted if it is a known lemma, otherwise the shortest sane candidate wins.
All tables are lowercase; case is transferred from the query surface.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path

from .tags import BASE_TAGS, CONTENT_TAGS, coarse_pos

VOWELS = set("aeiouy")


class NonContentTagError(ValueError):
    """Raised when a morphology operation is asked about a non-content tag."""


def _has_vowel(word: str) -> bool:
    return any(c in VOWELS for c in word.lower())


def match_case(template: str, word: str) -> str:
    """Transfer the case pattern of ``template`` onto ``word``."""
    if not word:
        return word
    if template.isupper() and len(template) > 1:
        return word.upper()
    if template[:1].isupper():
        return word[:1].upper() + word[1:]
    return word


def _vowel_groups(word: str) -> int:
    groups = 0
    prev = False
    for c in word:
        v = c in VOWELS
        if v and not prev:
            groups += 1
        prev = v
    return groups


def _doubles_final(word: str) -> bool:
    # consonant-vowel-consonant ending on a short stem: stop -> stopped
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    if c in VOWELS or c in "wxy":
        return False
    if b not in VOWELS or a in VOWELS:
        return False
    return _vowel_groups(word) == 1


# Ordered suffix rules for producing an inflected form from a lemma.
# Each entry: (predicate on lemma, replacement builder).

def _inflect_s(lemma: str) -> str:
    if lemma.endswith(("s", "x", "z", "ch", "sh")):
        return lemma + "es"
    if len(lemma) >= 2 and lemma.endswith("o") and lemma[-2] not in VOWELS:
        return lemma + "es"
    if len(lemma) >= 2 and lemma.endswith("y") and lemma[-2] not in VOWELS:
        return lemma[:-1] + "ies"
    return lemma + "s"


def _inflect_ed(lemma: str) -> str:
    if lemma.endswith("e"):
        return lemma + "d"
    if len(lemma) >= 2 and lemma.endswith("y") and lemma[-2] not in VOWELS:
        return lemma[:-1] + "ied"
    if _doubles_final(lemma):
        return lemma + lemma[-1] + "ed"
    return lemma + "ed"


def _inflect_ing(lemma: str) -> str:
    if lemma.endswith("ie"):
        return lemma[:-2] + "ying"
    if lemma.endswith("e") and len(lemma) >= 2 and lemma[-2] not in "aeio":
        return lemma[:-1] + "ing"
    if _doubles_final(lemma):
        return lemma + lemma[-1] + "ing"
    return lemma + "ing"


def _inflect_er(lemma: str) -> str:
    if lemma.endswith("e"):
        return lemma + "r"
    if len(lemma) >= 2 and lemma.endswith("y") and lemma[-2] not in VOWELS:
        return lemma[:-1] + "ier"
    if _doubles_final(lemma):
        return lemma + lemma[-1] + "er"
    return lemma + "er"


def _inflect_est(lemma: str) -> str:
    if lemma.endswith("e"):
        return lemma + "st"
    if len(lemma) >= 2 and lemma.endswith("y") and lemma[-2] not in VOWELS:
        return lemma[:-1] + "iest"
    if _doubles_final(lemma):
        return lemma + lemma[-1] + "est"
    return lemma + "est"


_INFLECT_RULES = {
    "NNS": _inflect_s,
    "VBZ": _inflect_s,
    "VBD": _inflect_ed,
    "VBN": _inflect_ed,
    "VBG": _inflect_ing,
    "JJR": _inflect_er,
    "JJS": _inflect_est,
}

# Ordered suffix-rewrite rules for lemmatization, per tag. Each rule is
# (suffix, replacement, min_surface_len); candidates are produced in order.
_LEMMATIZE_RULES: dict[str, tuple[tuple[str, str, int], ...]] = {
    "NNS": (
        ("ies", "y", 5),
        ("ves", "f", 5),
        ("ves", "fe", 5),
        ("es", "", 4),
        ("es", "e", 4),
        ("s", "", 3),
    ),
    "VBZ": (
        ("ies", "y", 5),
        ("es", "", 4),
        ("es", "e", 4),
        ("s", "", 3),
    ),
    "VBD": (
        ("ied", "y", 5),
        ("ed", "", 4),
        ("ed", "e", 4),
        ("d", "", 4),
    ),
    "VBN": (
        ("ied", "y", 5),
        ("ed", "", 4),
        ("ed", "e", 4),
        ("d", "", 4),
    ),
    "VBG": (
        ("ying", "ie", 6),
        ("ing", "", 5),
        ("ing", "e", 5),
    ),
    "JJR": (
        ("ier", "y", 5),
        ("er", "", 4),
        ("er", "e", 4),
    ),
    "JJS": (
        ("iest", "y", 6),
        ("est", "", 5),
        ("est", "e", 5),
    ),
}


def _dedouble(stem: str) -> str | None:
    # undo consonant doubling: stopp -> stop
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in VOWELS:
        return stem[:-1]
    return None


class MorphLexicon:
    """Immutable lemma/inflection dictionary with rule fallback."""

    def __init__(
        self,
        lemma_table: dict[tuple[str, str], str],
        inflect_table: dict[tuple[str, str], list[str]],
    ):
        self.lemma_table = lemma_table
        self.inflect_table = inflect_table
        self.known_lemmas = frozenset(lemma for lemma, _ in inflect_table) | frozenset(
            lemma for (_, _), lemma in lemma_table.items()
        )

    # -- loading ---------------------------------------------------------

    @classmethod
    def load(cls, lemma_path: str | Path, inflect_path: str | Path) -> "MorphLexicon":
        lemma_table: dict[tuple[str, str], str] = {}
        for line in Path(lemma_path).read_text(encoding="utf-8").splitlines():
            if not line or line.startswith("#"):
                continue
            surface, tag, lemma = line.split("\t")
            lemma_table[(surface, tag)] = lemma

        raw: list[tuple[str, str, str, int]] = []
        for line in Path(inflect_path).read_text(encoding="utf-8").splitlines():
            if not line or line.startswith("#"):
                continue
            lemma, tag, surface, rank = line.split("\t")
            raw.append((lemma, tag, surface, int(rank)))
        inflect_table: dict[tuple[str, str], list[str]] = {}
        for lemma, tag, surface, _rank in sorted(raw, key=lambda r: (r[0], r[1], r[3])):
            inflect_table.setdefault((lemma, tag), []).append(surface)
        return cls(lemma_table, inflect_table)

    @classmethod
    def default(cls) -> "MorphLexicon":
        return _default_lexicon()

    # -- operations ------------------------------------------------------

    def lemmatize(self, surface: str, tag: str) -> str:
        """Base form of ``surface`` under PTB ``tag``.

        Dictionary hit wins; otherwise ordered suffix rules, preferring the
        first candidate that is a known lemma, then the shortest sane
        candidate; otherwise the surface itself.
        """
        if tag not in CONTENT_TAGS:
            raise NonContentTagError(f"{tag!r} is not a content tag")
        if tag in BASE_TAGS:
            return surface
        low = surface.lower()
        hit = self.lemma_table.get((low, tag))
        if hit is not None:
            return match_case(surface, hit)

        candidates: list[str] = []
        for suffix, repl, min_len in _LEMMATIZE_RULES.get(tag, ()):
            if len(low) >= min_len and low.endswith(suffix):
                stem = low[: len(low) - len(suffix)] + repl
                if stem and _has_vowel(stem):
                    candidates.append(stem)
                    undoubled = _dedouble(stem)
                    if undoubled and _has_vowel(undoubled):
                        candidates.append(undoubled)
        for cand in candidates:
            if cand in self.known_lemmas:
                return match_case(surface, cand)
        if candidates:
            best = min(candidates, key=lambda c: (len(c), candidates.index(c)))
            return match_case(surface, best)
        return surface

    def inflection_of(self, surface: str, tag: str) -> str | None:
        """The inflection symbol tag for ``surface``, or None when uninflected.

        Base-form tags (NN, VB, JJ) always map to None. VBP maps to None when
        the surface already equals its lemma ("run") and to VBP otherwise
        ("are"). The remaining content tags name non-base grammar and are
        returned as-is even when lemmatization leaves the surface unchanged
        ("put"/VBD), which keeps decoding faithful.
        """
        if tag not in CONTENT_TAGS:
            raise NonContentTagError(f"{tag!r} is not a content tag")
        if tag in BASE_TAGS:
            return None
        if tag == "VBP" and self.lemmatize(surface, tag) == surface:
            return None
        return tag

    def inflect(self, lemma: str, tag: str | None) -> str:
        """Surface form of ``lemma`` under ``tag``; None means no inflection.

        Dictionary hits return the rank-1 surface. Misses fall back to the
        orthographic suffix rules (e-handling, consonant doubling, y->ies).
        """
        if not lemma:
            raise ValueError("lemma must be non-empty")
        if tag is None:
            return lemma
        low = lemma.lower()
        # Dictionary first even for VBP/base tags: "be"+VBP -> "are".
        forms = self.inflect_table.get((low, tag))
        if forms:
            return match_case(lemma, forms[0])
        if tag in BASE_TAGS or tag == "VBP":
            return lemma
        rule = _INFLECT_RULES.get(tag)
        if rule is None or len(low) < 3 or not _has_vowel(low):
            return lemma
        return match_case(lemma, rule(low))

    def variants_of(self, lemma: str, tag: str) -> list[str]:
        """All dictionary surfaces for (lemma, tag), preference-ordered."""
        forms = self.inflect_table.get((lemma.lower(), tag))
        return list(forms) if forms else []


@lru_cache(maxsize=1)
def _default_lexicon() -> MorphLexicon:
    data = resources.files("bite").joinpath("data")
    with resources.as_file(data.joinpath("lemmas.tsv")) as lp, resources.as_file(
        data.joinpath("inflections.tsv")
    ) as ip:
        return MorphLexicon.load(lp, ip)
