import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wolofbot.nlu.features import (
    LexSynFeaturizer,
    RegexPattern,
    SparseVector,
    count_vectors_featurize,
    extract_entities,
    regex_featurize,
)
from wolofbot.textcore import build_vocab

USSD = RegexPattern("ussd", r"#[0-9*]+#")


class TestSparseVector:
    def test_rejects_out_of_range_and_zero(self):
        with pytest.raises(ValueError):
            SparseVector(2, {5: 1.0})
        with pytest.raises(ValueError):
            SparseVector(2, {0: 0.0})

    def test_addition(self):
        a = SparseVector(3, {0: 1.0, 2: 2.0})
        b = SparseVector(3, {0: -1.0, 1: 4.0})
        assert (a + b).entries == {1: 4.0, 2: 2.0}

    def test_addition_dim_mismatch(self):
        with pytest.raises(ValueError):
            SparseVector(2, {}) + SparseVector(3, {})

    def test_concat_offsets_indices(self):
        a = SparseVector(2, {1: 1.0})
        b = SparseVector(3, {0: 5.0})
        c = a.concat(b)
        assert c.dim == 5 and c.entries == {1: 1.0, 2: 5.0}

    @given(
        st.lists(st.tuples(st.integers(0, 9), st.floats(-5, 5).filter(lambda x: x != 0)), max_size=8),
        st.lists(st.tuples(st.integers(0, 9), st.floats(-5, 5).filter(lambda x: x != 0)), max_size=8),
    )
    def test_addition_matches_dense(self, left, right):
        a = SparseVector(10, dict(left))
        b = SparseVector(10, dict(right))
        np.testing.assert_allclose((a + b).to_dense(), a.to_dense() + b.to_dense())


class TestCountVectors:
    def test_counts_and_oov_routing(self):
        vocab = build_vocab([["a", "a", "b"]])
        vec = count_vectors_featurize(["a", "a", "b"], vocab)
        assert vec.entries == {vocab.index("a"): 2.0, vocab.index("b"): 1.0}

    def test_empty_tokens(self):
        vocab = build_vocab([["a"]])
        assert count_vectors_featurize([], vocab).entries == {}

    def test_unknown_token_counts_at_oov(self):
        vocab = build_vocab([["a"]])
        vec = count_vectors_featurize(["z"], vocab)
        assert vec.entries == {vocab.oov_index: 1.0}

    def test_bag_property_order_insensitive(self):
        vocab = build_vocab([["a", "b", "c"]])
        v1 = count_vectors_featurize(["a", "b", "c", "a"], vocab)
        v2 = count_vectors_featurize(["a", "a", "c", "b"], vocab)
        assert v1.entries == v2.entries

    def test_char_ngrams_live_in_separate_range(self):
        vocab = build_vocab([["ab"]])
        plain = count_vectors_featurize(["ab"], vocab)
        extended = count_vectors_featurize(["ab"], vocab, char_ngram_range=(2, 3), char_buckets=16)
        assert extended.dim == plain.dim + 16
        assert {i for i in extended.entries if i < plain.dim} == set(plain.entries)
        assert any(i >= plain.dim for i in extended.entries)


class TestLexSyn:
    def test_single_token_features(self):
        feats = LexSynFeaturizer.fit([["waaw"]], window=1)
        vec = feats.transform(["waaw"])
        by_key = {k: vec.entries.get(i) for k, i in feats.feature_index.items()}
        assert by_key[(0, "prefix2", "wa")] == 1.0
        assert by_key[(0, "suffix2", "aw")] == 1.0
        assert by_key[(0, "suffix3", "aaw")] == 1.0
        assert by_key[(0, "bos", "1")] == 1.0
        assert by_key[(0, "eos", "1")] == 1.0

    def test_empty_tokens(self):
        feats = LexSynFeaturizer.fit([["a", "b"]], window=1)
        assert feats.transform([]).entries == {}

    def test_digit_feature_for_ussd_token(self):
        feats = LexSynFeaturizer.fit([["#221*1*1#"]], window=0)
        vec = feats.transform(["#221*1*1#"])
        assert vec.entries[feats.feature_index[(0, "digit", "1")]] == 1.0

    def test_unseen_shape_features_dropped(self):
        feats = LexSynFeaturizer.fit([["aa"]], window=0)
        vec = feats.transform(["zz"])  # only the positional bos/eos keys match
        matched = {k for k, i in feats.feature_index.items() if i in vec.entries}
        assert matched == {(0, "bos", "1"), (0, "eos", "1")}

    def test_mapping_deterministic(self):
        a = LexSynFeaturizer.fit([["waaw", "dédét"], ["ma"]], window=1)
        b = LexSynFeaturizer.fit([["ma"], ["waaw", "dédét"]], window=1)
        assert a.feature_index == b.feature_index

    def test_serialization_round_trip(self):
        feats = LexSynFeaturizer.fit([["waaw", "#1#"]], window=1)
        restored = LexSynFeaturizer.from_dict(feats.to_dict())
        assert restored == feats


class TestRegex:
    def test_extracts_ussd_with_span(self):
        text = "défal #221*1*1#"
        matches = extract_entities(text, [USSD])
        assert len(matches) == 1
        m = matches[0]
        assert m.entity == "ussd"
        assert m.surface == "#221*1*1#"
        assert text[m.start : m.end] == m.surface

    def test_no_match(self):
        assert extract_entities("waaw", [USSD]) == []

    def test_leftmost_non_overlapping_in_order(self):
        matches = extract_entities("#1# puis #2#", [USSD])
        assert [m.surface for m in matches] == ["#1#", "#2#"]

    def test_invalid_pattern_fails_at_load(self):
        with pytest.raises(ValueError):
            RegexPattern("broken", "[unclosed")

    def test_binary_features(self):
        other = RegexPattern("waaw", r"\bwaaw\b")
        vec = regex_featurize("waaw #5# waaw", [USSD, other])
        assert vec.entries == {0: 1.0, 1: 1.0}
        assert regex_featurize("dédét", [USSD, other]).entries == {}
