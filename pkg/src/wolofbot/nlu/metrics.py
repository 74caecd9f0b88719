"""Classification metrics and the stratified k-fold evaluation harness.

Per-class precision/recall/F1 follow the usual conventions (0 when the
denominator is 0); weighted averages are support-weighted. Cross-validation
sums the per-fold confusion matrices before computing the report, so the
numbers aggregate exactly like a single pass over the whole dataset.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from wolofbot.nlu.data import IntentDataset
from wolofbot.nlu.model import TrainConfig, train_intent_model


@dataclass(frozen=True)
class LabelMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class MetricsReport:
    labels: tuple[str, ...]
    per_label: dict[str, LabelMetrics]
    weighted_precision: float
    weighted_recall: float
    weighted_f1: float
    confusion: tuple[tuple[int, ...], ...]  # rows = gold, cols = predicted

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "per_label": {
                l: {
                    "precision": m.precision,
                    "recall": m.recall,
                    "f1": m.f1,
                    "support": m.support,
                }
                for l, m in self.per_label.items()
            },
            "weighted": {
                "precision": self.weighted_precision,
                "recall": self.weighted_recall,
                "f1": self.weighted_f1,
            },
            "confusion": [list(row) for row in self.confusion],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True, indent=2)


def confusion_from_pairs(
    gold: Sequence[str], predicted: Sequence[str], labels: Sequence[str]
) -> np.ndarray:
    if len(gold) != len(predicted):
        raise ValueError("gold and predicted label lists differ in length")
    index = {l: i for i, l in enumerate(labels)}
    matrix = np.zeros((len(labels), len(labels)), dtype=int)
    for g, p in zip(gold, predicted):
        matrix[index[g], index[p]] += 1
    return matrix


def metrics_from_confusion(confusion: np.ndarray | Sequence[Sequence[int]], labels: Sequence[str]) -> MetricsReport:
    """Report from a gold-by-predicted count matrix."""
    matrix = np.asarray(confusion, dtype=int)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"confusion matrix must be square, got shape {matrix.shape}")
    if matrix.shape[0] != len(labels):
        raise ValueError("label list does not match confusion matrix size")
    if (matrix < 0).any():
        raise ValueError("confusion matrix contains negative counts")
    if matrix.sum() == 0:
        raise ValueError("confusion matrix is all zeros")

    per_label: dict[str, LabelMetrics] = {}
    for i, label in enumerate(labels):
        tp = int(matrix[i, i])
        fp = int(matrix[:, i].sum()) - tp
        fn = int(matrix[i, :].sum()) - tp
        precision = tp / (tp + fp) if tp + fp > 0 else 0.0
        recall = tp / (tp + fn) if tp + fn > 0 else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
        per_label[label] = LabelMetrics(precision=precision, recall=recall, f1=f1, support=tp + fn)

    total = sum(m.support for m in per_label.values())
    weighted = {
        name: sum(getattr(m, name) * m.support for m in per_label.values()) / total
        for name in ("precision", "recall", "f1")
    }
    return MetricsReport(
        labels=tuple(labels),
        per_label=per_label,
        weighted_precision=weighted["precision"],
        weighted_recall=weighted["recall"],
        weighted_f1=weighted["f1"],
        confusion=tuple(tuple(int(v) for v in row) for row in matrix),
    )


def stratified_folds(labels_of_examples: Sequence[str], k: int, seed: int) -> list[list[int]]:
    """Deterministic stratified fold assignment.

    Examples of each label are shuffled (seeded) and dealt round-robin to
    folds; a rotating start offset spreads remainders, so each fold's label
    count deviates from an even split by at most one example. Labels with
    fewer than k examples degrade gracefully through the same dealing.
    """
    rng = np.random.default_rng(seed)
    by_label: dict[str, list[int]] = {}
    for idx, label in enumerate(labels_of_examples):
        by_label.setdefault(label, []).append(idx)

    folds: list[list[int]] = [[] for _ in range(k)]
    offset = 0
    for label in sorted(by_label):
        indices = by_label[label]
        order = rng.permutation(len(indices))
        for pos, oi in enumerate(order):
            folds[(offset + pos) % k].append(indices[oi])
        offset = (offset + len(indices)) % k
    return folds


def cross_validate(
    dataset: IntentDataset,
    k: int = 5,
    seed: int = 0,
    config: TrainConfig | None = None,
) -> MetricsReport:
    """Stratified k-fold evaluation; per-fold confusions summed, then scored."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if k > len(dataset):
        raise ValueError(f"k={k} exceeds dataset size {len(dataset)}")
    config = config or TrainConfig()
    labels = dataset.labels
    folds = stratified_folds([e.intent for e in dataset.examples], k, seed)

    total = np.zeros((len(labels), len(labels)), dtype=int)
    for held_out in folds:
        if not held_out:
            continue
        held = set(held_out)
        train_examples = tuple(e for i, e in enumerate(dataset.examples) if i not in held)
        fold_train = replace(dataset, examples=train_examples)
        model = train_intent_model(fold_train, config)
        gold = [dataset.examples[i].intent for i in held_out]
        pred = [model.predict(dataset.examples[i].text).intent for i in held_out]
        total += confusion_from_pairs(gold, pred, labels)
    return metrics_from_confusion(total, labels)
