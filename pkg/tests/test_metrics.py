import json

import numpy as np
import pytest

from wolofbot.nlu.data import IntentDataset, IntentExample
from wolofbot.nlu.metrics import (
    confusion_from_pairs,
    cross_validate,
    metrics_from_confusion,
    stratified_folds,
)
from wolofbot.nlu.model import TrainConfig


def brute_force_metrics(gold, predicted, labels):
    """Direct TP/FP/FN counting from the prediction lists (oracle)."""
    per_label = {}
    for label in labels:
        tp = sum(1 for g, p in zip(gold, predicted) if g == label and p == label)
        fp = sum(1 for g, p in zip(gold, predicted) if g != label and p == label)
        fn = sum(1 for g, p in zip(gold, predicted) if g == label and p != label)
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per_label[label] = (precision, recall, f1, tp + fn)
    total = sum(s for *_, s in per_label.values())
    weighted = tuple(
        sum(vals[i] * vals[3] for vals in per_label.values()) / total for i in range(3)
    )
    return per_label, weighted


class TestMetricsFromConfusion:
    def test_perfect_classifier(self):
        report = metrics_from_confusion([[5, 0], [0, 7]], ["a", "b"])
        assert report.weighted_f1 == 1.0
        assert all(m.precision == m.recall == m.f1 == 1.0 for m in report.per_label.values())

    def test_hand_computed_point_eight(self):
        report = metrics_from_confusion([[8, 2], [2, 8]], ["a", "b"])
        assert report.weighted_precision == pytest.approx(0.8)
        assert report.weighted_recall == pytest.approx(0.8)
        assert report.weighted_f1 == pytest.approx(0.8)

    def test_zero_support_label_excluded_from_weighting(self):
        report = metrics_from_confusion([[5, 0, 0], [0, 5, 0], [0, 0, 0]], ["a", "b", "c"])
        assert report.per_label["c"].support == 0
        assert report.weighted_f1 == pytest.approx(1.0)

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            metrics_from_confusion([[0, 0], [0, 0]], ["a", "b"])

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            metrics_from_confusion([[1, -1], [0, 1]], ["a", "b"])

    def test_matches_brute_force_on_random_predictions(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            n_labels = int(rng.integers(2, 11))
            labels = [f"l{i}" for i in range(n_labels)]
            size = int(rng.integers(1, 60))
            gold = [labels[i] for i in rng.integers(n_labels, size=size)]
            predicted = [labels[i] for i in rng.integers(n_labels, size=size)]
            report = metrics_from_confusion(confusion_from_pairs(gold, predicted, labels), labels)
            per_label, weighted = brute_force_metrics(gold, predicted, labels)
            for label in labels:
                m = report.per_label[label]
                p, r, f1, support = per_label[label]
                assert (m.precision, m.recall, m.f1, m.support) == pytest.approx((p, r, f1, support), abs=1e-12)
            assert (report.weighted_precision, report.weighted_recall, report.weighted_f1) == pytest.approx(
                weighted, abs=1e-12
            )

    def test_json_field_names(self):
        payload = json.loads(metrics_from_confusion([[1, 0], [0, 1]], ["a", "b"]).to_json())
        assert set(payload) == {"labels", "per_label", "weighted", "confusion"}
        assert set(payload["weighted"]) == {"precision", "recall", "f1"}
        assert set(payload["per_label"]["a"]) == {"precision", "recall", "f1", "support"}


class TestStratifiedFolds:
    def test_proportions_deviate_at_most_one(self):
        labels = ["a"] * 21 + ["b"] * 20 + ["c"] * 19
        folds = stratified_folds(labels, k=5, seed=3)
        assert sorted(i for fold in folds for i in fold) == list(range(60))
        for name, count in (("a", 21), ("b", 20), ("c", 19)):
            per_fold = [sum(1 for i in fold if labels[i] == name) for fold in folds]
            assert max(per_fold) - min(per_fold) <= 1, (name, per_fold)

    def test_small_label_round_robin(self):
        labels = ["a"] * 10 + ["rare"] * 3
        folds = stratified_folds(labels, k=5, seed=0)
        rare_per_fold = [sum(1 for i in fold if labels[i] == "rare") for fold in folds]
        assert max(rare_per_fold) <= 1


class TestCrossValidate:
    def _separable(self, per_label=10):
        examples = []
        for i in range(per_label):
            examples.append(IntentExample(f"waaw gii {i % 3}", "affirm"))
            examples.append(IntentExample(f"dédét boobu {i % 3}", "deny"))
        return IntentDataset(examples=tuple(examples))

    def test_separable_toy_reaches_perfect_f1(self):
        report = cross_validate(self._separable(), k=5, seed=1, config=TrainConfig(epochs=60))
        assert report.weighted_f1 == pytest.approx(1.0)

    def test_deterministic(self):
        a = cross_validate(self._separable(), k=5, seed=2, config=TrainConfig(epochs=30))
        b = cross_validate(self._separable(), k=5, seed=2, config=TrainConfig(epochs=30))
        assert a.to_json() == b.to_json()

    def test_paper_shaped_dataset_accepted(self, sargal_dataset):
        counts = sargal_dataset.counts_by_label()
        assert len(counts) == 9
        assert len(sargal_dataset) == 184
        assert all(19 <= c <= 22 for c in counts.values())

    def test_k_validation(self):
        ds = self._separable(2)
        with pytest.raises(ValueError):
            cross_validate(ds, k=1)
        with pytest.raises(ValueError):
            cross_validate(ds, k=len(ds) + 1)
