"""Penn Treebank tag inventory and the content-tag subsets used throughout."""

from __future__ import annotations

# Full PTB tagset (word tags plus punctuation tags), in canonical order.
# This ordering is load-bearing: perceptron score ties break toward the
# lowest index.
PTB_TAGS: tuple[str, ...] = (
    "#", "$", "''", "(", ")", ",", ".", ":", "``",
    "CC", "CD", "DT", "EX", "FW", "IN",
    "JJ", "JJR", "JJS",
    "LS", "MD",
    "NN", "NNP", "NNPS", "NNS",
    "PDT", "POS", "PRP", "PRP$",
    "RB", "RBR", "RBS", "RP",
    "SYM", "TO", "UH",
    "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "WDT", "WP", "WP$", "WRB",
)

PTB_TAGSET = frozenset(PTB_TAGS)

# Inflectable content tags: common nouns, verbs, adjectives. Proper nouns
# (NNP/NNPS) are excluded; they carry no inflection symbol and pass through
# the base-inflection transform untouched.
NOUN_TAGS = ("NN", "NNS")
VERB_TAGS = ("VB", "VBP", "VBZ", "VBD", "VBG", "VBN")
ADJ_TAGS = ("JJ", "JJR", "JJS")

CONTENT_TAGS = frozenset(NOUN_TAGS) | frozenset(VERB_TAGS) | frozenset(ADJ_TAGS)

# Tags whose surface is the base form itself.
BASE_TAGS = frozenset({"NN", "VB", "JJ"})

# Non-base content tags; these are the only tags that may appear as
# inflection symbols.
INFLECTION_TAGS = ("NNS", "VBD", "VBG", "VBN", "VBZ", "VBP", "JJR", "JJS")


def coarse_pos(tag: str) -> str | None:
    """Map a content tag to NOUN/VERB/ADJ; None for everything else."""
    if tag in NOUN_TAGS:
        return "NOUN"
    if tag in VERB_TAGS:
        return "VERB"
    if tag in ADJ_TAGS:
        return "ADJ"
    return None


def family_tags(tag: str) -> tuple[str, ...]:
    """All content tags sharing ``tag``'s coarse part of speech."""
    pos = coarse_pos(tag)
    if pos == "NOUN":
        return NOUN_TAGS
    if pos == "VERB":
        return VERB_TAGS
    if pos == "ADJ":
        return ADJ_TAGS
    return ()
