import numpy as np
import pytest

from wolofbot import linmodel
from wolofbot.nlu.data import IntentDataset, IntentExample
from wolofbot.nlu.features import RegexPattern
from wolofbot.nlu.model import TrainConfig, load_model, save_model, train_intent_model

TOY_CONFIG = TrainConfig(epochs=60, seed=13)


def toy_dataset(copies: int = 10) -> IntentDataset:
    examples = []
    for _ in range(copies):
        examples.append(IntentExample("waaw", "affirm"))
        examples.append(IntentExample("dédét", "deny"))
    return IntentDataset(examples=tuple(examples))


class TestTraining:
    def test_separable_data_reaches_full_train_accuracy(self):
        dataset = toy_dataset()
        model = train_intent_model(dataset, TOY_CONFIG)
        hits = sum(model.predict(e.text).intent == e.intent for e in dataset.examples)
        assert hits == len(dataset.examples)

    def test_single_label_rejected(self):
        dataset = IntentDataset(examples=(IntentExample("waaw", "affirm"),))
        with pytest.raises(ValueError):
            train_intent_model(dataset, TOY_CONFIG)

    def test_empty_dataset_rejected(self):
        with pytest.raises(ValueError):
            train_intent_model(IntentDataset(examples=()), TOY_CONFIG)

    def test_training_is_bit_deterministic(self):
        a = train_intent_model(toy_dataset(), TOY_CONFIG)
        b = train_intent_model(toy_dataset(), TOY_CONFIG)
        assert np.array_equal(a.weights, b.weights)
        assert np.array_equal(a.bias, b.bias)

    def test_duplicated_example_keeps_label_set(self):
        base = toy_dataset()
        extended = IntentDataset(examples=base.examples + (IntentExample("waaw", "affirm"),))
        assert train_intent_model(extended, TOY_CONFIG).labels == base.labels


class TestPrediction:
    def test_training_example_predicted_confidently(self):
        model = train_intent_model(toy_dataset(), TOY_CONFIG)
        pred = model.predict("waaw")
        assert pred.intent == "affirm"
        assert pred.confidence > 0.5

    def test_confidences_sum_to_one(self):
        model = train_intent_model(toy_dataset(), TOY_CONFIG)
        for text in ("waaw", "dédét", "lorem ipsum", ""):
            total = sum(c for _, c in model.predict(text).ranking)
            assert total == pytest.approx(1.0, abs=1e-9)

    def test_empty_text_distribution_is_valid(self):
        model = train_intent_model(toy_dataset(), TOY_CONFIG)
        pred = model.predict("")
        assert all(0.0 <= c <= 1.0 for _, c in pred.ranking)
        assert len(pred.ranking) == 2

    def test_ranking_sorted_with_lexicographic_ties(self):
        model = train_intent_model(toy_dataset(), TOY_CONFIG)
        ranking = model.predict("waaw").ranking
        confidences = [c for _, c in ranking]
        assert confidences == sorted(confidences, reverse=True)

    def test_entities_attached(self):
        dataset = IntentDataset(
            examples=toy_dataset().examples,
            patterns=(RegexPattern("ussd", r"#[0-9*]+#"),),
        )
        model = train_intent_model(dataset, TOY_CONFIG)
        pred = model.predict("waaw #221*1*1#")
        assert [e.entity for e in pred.entities] == ["ussd"]


class TestGradients:
    def test_analytic_matches_central_differences(self):
        rng = np.random.default_rng(0)
        x = rng.normal(size=(3, 4))
        y = np.array([0, 1, 0])
        weights = rng.normal(size=(2, 4)) * 0.5
        bias = rng.normal(size=2) * 0.1
        _, gw, gb = linmodel.loss_and_grad(weights, bias, x, y, l2=0.01)
        ngw, ngb = linmodel.numeric_grad(weights, bias, x, y, l2=0.01)
        assert np.abs(gw - ngw).max() / max(np.abs(ngw).max(), 1e-12) < 1e-4
        assert np.abs(gb - ngb).max() / max(np.abs(ngb).max(), 1e-12) < 1e-4

    def test_softmax_rows_normalized(self):
        rng = np.random.default_rng(1)
        probs = linmodel.softmax(rng.normal(size=(5, 7)) * 10)
        np.testing.assert_allclose(probs.sum(axis=1), np.ones(5), atol=1e-12)


class TestSerialization:
    def test_save_load_round_trip(self, tmp_path):
        dataset = IntentDataset(
            examples=toy_dataset().examples,
            patterns=(RegexPattern("ussd", r"#[0-9*]+#"),),
        )
        model = train_intent_model(dataset, TOY_CONFIG)
        path = tmp_path / "model.json"
        save_model(model, path)
        restored = load_model(path)
        for text in ("waaw", "dédét", "waaw #221*1*1#", ""):
            assert restored.predict(text) == model.predict(text)

    def test_version_check(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text('{"format_version": 999}')
        with pytest.raises(ValueError):
            load_model(path)
