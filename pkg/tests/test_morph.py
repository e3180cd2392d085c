import pytest

from bite.morph import MorphLexicon, NonContentTagError, match_case


@pytest.fixture(scope="module")
def lex():
    return MorphLexicon.default()


class TestLemmatize:
    def test_irregular_past(self, lex):
        assert lex.lemmatize("went", "VBD") == "go"
        assert lex.lemmatize("took", "VBD") == "take"
        assert lex.lemmatize("kept", "VBD") == "keep"

    def test_regular_suffixes(self, lex):
        assert lex.lemmatize("danced", "VBD") == "dance"
        assert lex.lemmatize("dancing", "VBG") == "dance"

    def test_base_form_identity(self, lex):
        assert lex.lemmatize("cat", "NN") == "cat"
        assert lex.lemmatize("run", "VB") == "run"
        assert lex.lemmatize("big", "JJ") == "big"

    def test_irregular_plural(self, lex):
        assert lex.lemmatize("mice", "NNS") == "mouse"
        assert lex.lemmatize("children", "NNS") == "child"

    def test_suppletive_be(self, lex):
        assert lex.lemmatize("was", "VBD") == "be"
        assert lex.lemmatize("were", "VBD") == "be"
        assert lex.lemmatize("am", "VBP") == "be"

    def test_case_transfer(self, lex):
        assert lex.lemmatize("Went", "VBD") == "Go"
        assert lex.lemmatize("DOGS", "NNS") == "DOG"

    def test_unknown_word_rule_fallback(self, lex):
        assert lex.lemmatize("blicketed", "VBD") == "blicket"
        assert lex.lemmatize("blickets", "NNS") == "blicket"

    def test_non_content_tag_rejected(self, lex):
        with pytest.raises(NonContentTagError):
            lex.lemmatize("the", "DT")

    def test_idempotent(self, lex):
        for surface, tag, base_tag in [("went", "VBD", "VB"), ("mice", "NNS", "NN")]:
            lemma = lex.lemmatize(surface, tag)
            assert lex.lemmatize(lemma, base_tag) == lemma


class TestInflectionOf:
    def test_inflected_forms_keep_tag(self, lex):
        assert lex.inflection_of("took", "VBD") == "VBD"
        assert lex.inflection_of("dogs", "NNS") == "NNS"

    def test_base_tags_are_null(self, lex):
        assert lex.inflection_of("cat", "NN") is None
        assert lex.inflection_of("run", "VB") is None
        assert lex.inflection_of("big", "JJ") is None

    def test_vbp_null_when_surface_is_lemma(self, lex):
        assert lex.inflection_of("run", "VBP") is None
        assert lex.inflection_of("are", "VBP") == "VBP"

    def test_identical_surface_nonbase_tag_kept(self, lex):
        # put/VBD must stay distinguishable from put/VB
        assert lex.inflection_of("put", "VBD") == "VBD"

    def test_non_content_rejected(self, lex):
        with pytest.raises(NonContentTagError):
            lex.inflection_of(".", ".")


class TestInflect:
    def test_irregulars(self, lex):
        assert lex.inflect("take", "VBD") == "took"
        assert lex.inflect("take", "VBN") == "taken"
        assert lex.inflect("go", "VBD") == "went"

    def test_regular_orthography(self, lex):
        assert lex.inflect("dance", "VBG") == "dancing"
        assert lex.inflect("stop", "VBD") == "stopped"
        assert lex.inflect("carry", "VBZ") == "carries"
        assert lex.inflect("happy", "JJR") == "happier"

    def test_null_is_identity(self, lex):
        assert lex.inflect("run", None) == "run"
        assert lex.inflect("xyzzy", None) == "xyzzy"

    def test_overabundance_prefers_rank_one(self, lex):
        assert lex.inflect("be", "VBD") == "was"
        assert lex.inflect("be", "VBP") == "are"

    def test_unknown_lemma_rules(self, lex):
        assert lex.inflect("blicket", "VBZ") == "blickets"
        assert lex.inflect("blicket", "VBG") == "blicketing"

    def test_case_transfer(self, lex):
        assert lex.inflect("Dog", "NNS") == "Dogs"
        assert lex.inflect("Be", "VBD") == "Was"

    def test_short_or_vowelless_lemma_unchanged(self, lex):
        # apostrophe fragments from the pretokenizer must survive decode
        assert lex.inflect("s", "VBZ") == "s"
        assert lex.inflect("ll", "NNS") == "ll"

    def test_empty_lemma_rejected(self, lex):
        with pytest.raises(ValueError):
            lex.inflect("", "VBD")

    def test_never_empty_result(self, lex):
        for lemma in ("a", "i", "s", "xy", "the"):
            for tag in ("NNS", "VBD", "VBG", "VBZ", "JJR", "JJS", None):
                assert lex.inflect(lemma, tag)


class TestRoundTrip:
    def test_lemma_table_round_trips_to_variant(self, lex):
        # every dictionary surface must reinflect to itself or a listed
        # overabundant variant of the same cell
        for (surface, tag), lemma in lex.lemma_table.items():
            variants = lex.inflect_table.get((lemma, tag), [])
            assert surface in variants, (surface, tag, lemma, variants)

    def test_rank_one_reconstruction_rate(self, lex):
        total = len(lex.lemma_table)
        hits = sum(
            1
            for (surface, tag), lemma in lex.lemma_table.items()
            if lex.inflect(lemma, tag) == surface
        )
        assert hits / total > 0.98


def test_match_case():
    assert match_case("Went", "go") == "Go"
    assert match_case("WENT", "go") == "GO"
    assert match_case("went", "go") == "go"
    assert match_case("A", "an") == "An"
