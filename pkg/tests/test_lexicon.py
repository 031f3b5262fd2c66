from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cricrules.errors import FileUnreadable, LexiconError
from cricrules.features import BATTING_FEATURES, BOWLING_FEATURES
from cricrules.lexicon import (
    FeatureLexicon,
    extract_ngrams,
    lint_lexicon,
    load_lexicon,
    map_features,
    normalize_tokens,
)


class TestNormalizeTokens:
    def test_punctuation_and_case(self):
        assert normalize_tokens("Short ball, Paine pulls - straight!") == [
            "short", "ball", "paine", "pulls", "straight",
        ]

    def test_intra_word_hyphen_survives(self):
        assert normalize_tokens("MOVE-IN and a half-volley") == [
            "move-in", "and", "a", "half-volley",
        ]

    def test_dangling_hyphen_splits(self):
        assert normalize_tokens("pulls - straight") == ["pulls", "straight"]
        assert normalize_tokens("-edge- of the bat") == ["edge", "of", "the", "bat"]

    def test_digits_kept(self):
        assert normalize_tokens("4th stump line") == ["4th", "stump", "line"]

    @given(st.text(max_size=80))
    def test_tokens_are_normalized(self, text):
        tokens = normalize_tokens(text)
        for token in tokens:
            assert token == token.lower()
            assert " " not in token
            assert not token.startswith("-") and not token.endswith("-")


class TestExtractNgrams:
    def test_unigrams_and_bigrams(self):
        assert extract_ngrams(["a", "b", "c"]) == {"a", "b", "c", "a b", "b c"}

    def test_single_token(self):
        assert extract_ngrams(["solo"]) == {"solo"}

    def test_empty(self):
        assert extract_ngrams([]) == set()


class TestMapFeatures:
    def test_outcome_always_present(self, lexicon):
        bat, bowl = map_features(set(), "4", lexicon)
        assert bat == {"4 run"}
        assert bowl == set()

    def test_lexicon_hits(self, lexicon):
        grams = extract_ngrams(
            normalize_tokens("good length, catches the outside edge, punch")
        )
        bat, bowl = map_features(grams, "1", lexicon)
        assert {"1 run", "beaten"} <= bat
        assert "attacked" in bat
        assert "good" in bowl

    def test_multi_membership(self, lexicon):
        grams = extract_ngrams(normalize_tokens("a big inswinger"))
        _, bowl = map_features(grams, "0", lexicon)
        assert {"swing", "move-in"} <= bowl

    def test_unknown_outcome(self, lexicon):
        with pytest.raises(ValueError):
            map_features(set(), "7", lexicon)


class TestFeatureLexicon:
    def test_all_features_keyed(self, lexicon):
        assert set(lexicon.batting) == set(BATTING_FEATURES)
        assert set(lexicon.bowling) == set(BOWLING_FEATURES)

    def test_from_entries_rejects_unknown_feature(self):
        with pytest.raises(LexiconError):
            FeatureLexicon.from_entries([("bat", "cover drive", "nice")])

    def test_from_entries_rejects_unknown_side(self):
        with pytest.raises(LexiconError):
            FeatureLexicon.from_entries([("bowler", "good", "good length")])

    def test_from_entries_rejects_unnormalized(self):
        with pytest.raises(LexiconError):
            FeatureLexicon.from_entries([("bat", "attacked", "Pulled Hard")])
        with pytest.raises(LexiconError):
            FeatureLexicon.from_entries([("bat", "attacked", "one two three")])


class TestLexiconFiles:
    def test_load_and_entries(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text(
            "# comment\n"
            "bat\tattacked\tpunched\n"
            "\n"
            "bowl\tshort\tbouncer\n",
            encoding="utf-8",
        )
        lex = load_lexicon(path)
        assert lex.batting["attacked"] == frozenset({"punched"})
        assert lex.bowling["short"] == frozenset({"bouncer"})

    def test_load_bad_file(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("bat\tattacked\n", encoding="utf-8")
        with pytest.raises(LexiconError):
            load_lexicon(path)

    def test_load_missing(self, tmp_path):
        with pytest.raises(FileUnreadable):
            load_lexicon(tmp_path / "absent.tsv")

    def test_lint_clean_file(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("bat\tattacked\tpunched\nbowl\tshort\tbouncer\n", encoding="utf-8")
        assert lint_lexicon(path) == []

    def test_lint_findings(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text(
            "bat\tattacked\tpunched\n"
            "bat\tattacked\tpunched\n"
            "bat\tnot a feature\tx\n"
            "bowl\tshort\tToo Loud\n"
            "only one field\n",
            encoding="utf-8",
        )
        findings = lint_lexicon(path)
        lines = [f.line_no for f in findings]
        assert lines == [2, 3, 4, 5]
        assert "duplicate" in findings[0].problem

    def test_shipped_lexicon_is_lint_clean(self):
        from importlib import resources

        with resources.as_file(
            resources.files("cricrules").joinpath("data/lexicon.tsv")
        ) as p:
            assert lint_lexicon(p) == []
