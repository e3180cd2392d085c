"""Trainable averaged-perceptron part-of-speech tagger with greedy decoding.

The model keeps one weight vector per feature string, averaged over every
online update (time-weighted), plus a shortcut lexicon for words that are
effectively unambiguous in the training corpus. Training is deterministic
given the shuffle seed. Serialization is a versioned JSON document that
round-trips bit-exactly.

Tagged-corpus file format: UTF-8, one token per line as "surface<TAB>tag",
blank line between sentences.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .pretok import WordToken
from .tags import PTB_TAGS, PTB_TAGSET

LEXICON_MIN_FREQ = 20
LEXICON_AMBIGUITY = 0.97

Sentence = list[tuple[str, str]]


class UnknownTagError(ValueError):
    """A training sentence used a tag outside the declared PTB tagset."""

    def __init__(self, tag: str, line: int):
        super().__init__(f"unknown tag {tag!r} at sentence {line}")
        self.tag = tag
        self.line = line


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: str


def _normalize(word: str) -> str:
    return "!DIGITS" if word.isdigit() else word.lower()


def _features(i: int, word: str, context: list[str], prev: str, prev2: str) -> list[str]:
    """Feature strings for the token at position ``i``.

    ``context`` is the normalized word sequence padded with boundary markers
    at both ends (so i is offset by 2).
    """
    w = context[i + 2]
    feats = [
        "b",
        "w=" + w,
        "suf1=" + w[-1:],
        "suf2=" + w[-2:],
        "suf3=" + w[-3:],
        "pre1=" + w[:1],
        "pt=" + prev,
        "ppt=" + prev2 + "|" + prev,
        "pw=" + context[i + 1],
        "nw=" + context[i + 3],
        "pw3=" + context[i + 1][-3:],
        "nw3=" + context[i + 3][-3:],
    ]
    if any(c.isdigit() for c in word):
        feats.append("hasdigit")
    if "-" in word:
        feats.append("hyphen")
    if word[:1].isupper():
        feats.append("cap")
    return feats


class PerceptronTagger:
    """Averaged perceptron with an unambiguous-word shortcut lexicon."""

    def __init__(
        self,
        weights: dict[str, dict[str, float]] | None = None,
        lexicon: dict[str, str] | None = None,
        tag_set: tuple[str, ...] = PTB_TAGS,
    ):
        self.weights = weights or {}
        self.lexicon = lexicon or {}
        self.tag_set = tuple(tag_set)
        self._tag_index = {t: i for i, t in enumerate(self.tag_set)}

    # -- training ----------------------------------------------------------

    @classmethod
    def train(
        cls, corpus: list[Sentence], epochs: int = 5, seed: int = 0
    ) -> "PerceptronTagger":
        """Train on tagged sentences; deterministic for a fixed seed."""
        if epochs < 1:
            raise ValueError("epochs must be >= 1")
        if not corpus:
            raise ValueError("training corpus is empty")
        for line_no, sentence in enumerate(corpus, start=1):
            for _, tag in sentence:
                if tag not in PTB_TAGSET:
                    raise UnknownTagError(tag, line_no)

        tagger = cls(lexicon=_build_lexicon(corpus))

        # online state: current weight, summed weight, last-update timestamp
        current: dict[str, dict[str, float]] = {}
        totals: dict[str, dict[str, float]] = {}
        stamps: dict[str, dict[str, int]] = {}
        clock = 0

        def upd(feat: str, tag: str, delta: float):
            cur = current.setdefault(feat, {})
            tot = totals.setdefault(feat, {})
            stp = stamps.setdefault(feat, {})
            tot[tag] = tot.get(tag, 0.0) + (clock - stp.get(tag, 0)) * cur.get(tag, 0.0)
            stp[tag] = clock
            cur[tag] = cur.get(tag, 0.0) + delta

        rng = random.Random(seed)
        order = list(range(len(corpus)))
        for _ in range(epochs):
            rng.shuffle(order)
            for idx in order:
                sentence = corpus[idx]
                context = (
                    ["-START2-", "-START-"]
                    + [_normalize(w) for w, _ in sentence]
                    + ["-END-", "-END2-"]
                )
                prev, prev2 = "-START-", "-START2-"
                for i, (word, gold) in enumerate(sentence):
                    shortcut = tagger.lexicon.get(word.lower())
                    if shortcut is not None:
                        guess = shortcut
                    else:
                        clock += 1
                        feats = _features(i, word, context, prev, prev2)
                        guess = tagger._predict(feats, current)
                        if guess != gold:
                            for f in feats:
                                upd(f, gold, +1.0)
                                upd(f, guess, -1.0)
                    prev2, prev = prev, guess

        # finalize averages
        for feat, cur in current.items():
            avg: dict[str, float] = {}
            for tag, w in cur.items():
                total = totals[feat].get(tag, 0.0) + (clock - stamps[feat][tag]) * w
                value = total / clock if clock else 0.0
                if value:
                    avg[tag] = value
            if avg:
                tagger.weights[feat] = avg
        return tagger

    def _predict(self, feats: list[str], table: dict[str, dict[str, float]]) -> str:
        scores: dict[str, float] = {}
        for f in feats:
            per_tag = table.get(f)
            if not per_tag:
                continue
            for tag, w in per_tag.items():
                scores[tag] = scores.get(tag, 0.0) + w
        if not scores:
            return "NN"
        return min(scores, key=lambda t: (-scores[t], self._tag_index[t]))

    # -- inference ---------------------------------------------------------

    def tag(self, tokens: list[WordToken] | list[str]) -> list[TaggedToken]:
        """Greedy left-to-right tagging; deterministic, one tag per token."""
        words = [t.surface if isinstance(t, WordToken) else t for t in tokens]
        if not words:
            return []
        context = ["-START2-", "-START-"] + [_normalize(w) for w in words] + [
            "-END-", "-END2-"
        ]
        out: list[TaggedToken] = []
        prev, prev2 = "-START-", "-START2-"
        for i, word in enumerate(words):
            guess = self.lexicon.get(word.lower())
            if guess is None:
                feats = _features(i, word, context, prev, prev2)
                guess = self._predict(feats, self.weights)
            out.append(TaggedToken(word, guess))
            prev2, prev = prev, guess
        return out

    def accuracy(self, corpus: list[Sentence]) -> float:
        """Token-level accuracy against gold tags."""
        right = total = 0
        for sentence in corpus:
            predicted = self.tag([w for w, _ in sentence])
            for (_, gold), tok in zip(sentence, predicted):
                right += tok.tag == gold
                total += 1
        return right / total if total else 0.0

    # -- serialization -----------------------------------------------------

    def save(self, path: str | Path):
        doc = {
            "format_version": 1,
            "tag_set": list(self.tag_set),
            "lexicon": self.lexicon,
            "weights": self.weights,
        }
        Path(path).write_text(
            json.dumps(doc, ensure_ascii=False, sort_keys=True), encoding="utf-8"
        )

    @classmethod
    def load(cls, path: str | Path) -> "PerceptronTagger":
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        if doc.get("format_version") != 1:
            raise ValueError(f"unsupported tagger model version in {path}")
        return cls(doc["weights"], doc["lexicon"], tuple(doc["tag_set"]))


def _build_lexicon(corpus: list[Sentence]) -> dict[str, str]:
    """Words seen often enough with (almost) always the same tag."""
    counts: dict[str, dict[str, int]] = {}
    for sentence in corpus:
        for word, tag in sentence:
            counts.setdefault(word.lower(), {}).setdefault(tag, 0)
            counts[word.lower()][tag] += 1
    lexicon = {}
    for word, tag_counts in counts.items():
        total = sum(tag_counts.values())
        tag, n = max(tag_counts.items(), key=lambda kv: kv[1])
        if total >= LEXICON_MIN_FREQ and n / total >= LEXICON_AMBIGUITY:
            lexicon[word] = tag
    return lexicon


def read_tagged_corpus(path: str | Path) -> list[Sentence]:
    """Parse the one-token-per-line tab-separated corpus format."""
    sentences: list[Sentence] = []
    current: Sentence = []
    for line_no, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        try:
            surface, tag = line.split("\t")
        except ValueError:
            raise ValueError(f"{path}:{line_no}: expected 'surface<TAB>tag'")
        if tag not in PTB_TAGSET:
            raise UnknownTagError(tag, line_no)
        current.append((surface, tag))
    if current:
        sentences.append(current)
    return sentences


def write_tagged_corpus(sentences: list[Sentence], path: str | Path):
    lines: list[str] = []
    for sentence in sentences:
        for surface, tag in sentence:
            lines.append(f"{surface}\t{tag}")
        lines.append("")
    Path(path).write_text("\n".join(lines), encoding="utf-8")
