"""Trainable intent classifier over concatenated sparse features.

A multinomial logistic regression consumes the three featurizer blocks
(count vectors, lexical/shape window indicators, regex flags). It stands
in for a transformer intent classifier at desk scale: same inputs (sparse
feature vectors), same output contract (a softmax distribution over the
intent labels plus extracted entities).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from wolofbot import linmodel
from wolofbot.nlu.data import IntentDataset
from wolofbot.nlu.features import (
    EntityMatch,
    LexSynFeaturizer,
    RegexPattern,
    SparseVector,
    count_vectors_featurize,
    extract_entities,
    regex_featurize,
)
from wolofbot.textcore import Vocab, build_vocab, normalize, tokenize

MODEL_FORMAT_VERSION = 1


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 150
    learning_rate: float = 0.5
    l2: float = 1e-3
    batch_size: int = 8
    seed: int = 13
    min_count: int = 1
    window: int = 1
    char_ngram_range: tuple[int, int] | None = None
    char_buckets: int = 256

    def to_dict(self) -> dict:
        return {
            "epochs": self.epochs,
            "learning_rate": self.learning_rate,
            "l2": self.l2,
            "batch_size": self.batch_size,
            "seed": self.seed,
            "min_count": self.min_count,
            "window": self.window,
            "char_ngram_range": list(self.char_ngram_range) if self.char_ngram_range else None,
            "char_buckets": self.char_buckets,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TrainConfig":
        rng = data.get("char_ngram_range")
        return cls(
            epochs=int(data.get("epochs", 150)),
            learning_rate=float(data.get("learning_rate", 0.5)),
            l2=float(data.get("l2", 1e-3)),
            batch_size=int(data.get("batch_size", 8)),
            seed=int(data.get("seed", 13)),
            min_count=int(data.get("min_count", 1)),
            window=int(data.get("window", 1)),
            char_ngram_range=tuple(rng) if rng else None,
            char_buckets=int(data.get("char_buckets", 256)),
        )


@dataclass(frozen=True)
class Featurizer:
    """Frozen featurization pipeline shared by training and prediction."""

    vocab: Vocab
    lexsyn: LexSynFeaturizer
    patterns: tuple[RegexPattern, ...]
    char_ngram_range: tuple[int, int] | None = None
    char_buckets: int = 256

    @classmethod
    def fit(cls, dataset: IntentDataset, config: TrainConfig) -> "Featurizer":
        token_seqs = [tokenize(normalize(e.text)) for e in dataset.examples]
        vocab = build_vocab(token_seqs, min_count=config.min_count)
        lexsyn = LexSynFeaturizer.fit(token_seqs, window=config.window)
        return cls(
            vocab=vocab,
            lexsyn=lexsyn,
            patterns=tuple(dataset.patterns),
            char_ngram_range=config.char_ngram_range,
            char_buckets=config.char_buckets,
        )

    @property
    def dim(self) -> int:
        counts_dim = len(self.vocab)
        if self.char_ngram_range is not None:
            counts_dim += self.char_buckets
        return counts_dim + self.lexsyn.dim + len(self.patterns)

    def featurize(self, raw_text: str) -> SparseVector:
        tokens = tokenize(normalize(raw_text))
        counts = count_vectors_featurize(
            tokens, self.vocab, self.char_ngram_range, self.char_buckets
        )
        return counts.concat(self.lexsyn.transform(tokens)).concat(
            regex_featurize(raw_text, self.patterns)
        )

    def matrix(self, texts: Sequence[str]) -> np.ndarray:
        return np.stack([self.featurize(t).to_dense() for t in texts]) if texts else np.zeros((0, self.dim))

    def to_dict(self) -> dict:
        return {
            "vocab": {"tokens": list(self.vocab.tokens), "oov_index": self.vocab.oov_index},
            "lexsyn": self.lexsyn.to_dict(),
            "patterns": [{"name": p.name, "pattern": p.pattern} for p in self.patterns],
            "char_ngram_range": list(self.char_ngram_range) if self.char_ngram_range else None,
            "char_buckets": self.char_buckets,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Featurizer":
        tokens = tuple(data["vocab"]["tokens"])
        oov = int(data["vocab"]["oov_index"])
        vocab = Vocab(
            tokens=tokens,
            index_of={t: i for i, t in enumerate(tokens) if i != oov},
            oov_index=oov,
        )
        rng = data.get("char_ngram_range")
        return cls(
            vocab=vocab,
            lexsyn=LexSynFeaturizer.from_dict(data["lexsyn"]),
            patterns=tuple(RegexPattern(p["name"], p["pattern"]) for p in data["patterns"]),
            char_ngram_range=tuple(rng) if rng else None,
            char_buckets=int(data.get("char_buckets", 256)),
        )


@dataclass(frozen=True)
class Prediction:
    ranking: tuple[tuple[str, float], ...]  # (label, confidence), best first
    entities: tuple[EntityMatch, ...] = ()

    @property
    def intent(self) -> str:
        return self.ranking[0][0]

    @property
    def confidence(self) -> float:
        return self.ranking[0][1]

    def to_dict(self) -> dict:
        return {
            "intent": self.intent,
            "confidence": self.confidence,
            "ranking": [{"intent": l, "confidence": c} for l, c in self.ranking],
            "entities": [e.to_dict() for e in self.entities],
        }


@dataclass(frozen=True)
class IntentModel:
    """Frozen trained classifier; safe to share across request handlers."""

    featurizer: Featurizer
    labels: tuple[str, ...]
    weights: np.ndarray  # (n_labels, dim)
    bias: np.ndarray  # (n_labels,)
    config: TrainConfig

    def probabilities(self, raw_text: str) -> np.ndarray:
        x = self.featurizer.featurize(raw_text).to_dense()
        return linmodel.softmax(x @ self.weights.T + self.bias)

    def predict(self, raw_text: str) -> Prediction:
        probs = self.probabilities(raw_text)
        ranking = tuple(
            sorted(zip(self.labels, probs.tolist()), key=lambda lc: (-lc[1], lc[0]))
        )
        entities = tuple(extract_entities(raw_text, self.featurizer.patterns))
        return Prediction(ranking=ranking, entities=entities)


def train_intent_model(dataset: IntentDataset, config: TrainConfig = TrainConfig()) -> IntentModel:
    """Deterministic training: same dataset + config give identical weights."""
    if len(dataset) == 0:
        raise ValueError("cannot train on an empty dataset")
    labels = dataset.labels
    if len(labels) < 2:
        raise ValueError(f"training needs at least 2 intent labels, got {list(labels)}")

    featurizer = Featurizer.fit(dataset, config)
    label_index = {l: i for i, l in enumerate(labels)}
    x = featurizer.matrix([e.text for e in dataset.examples])
    y = np.array([label_index[e.intent] for e in dataset.examples])
    weights, bias = linmodel.fit(
        x,
        y,
        n_classes=len(labels),
        epochs=config.epochs,
        lr=config.learning_rate,
        l2=config.l2,
        batch_size=config.batch_size,
        seed=config.seed,
    )
    return IntentModel(featurizer=featurizer, labels=labels, weights=weights, bias=bias, config=config)


def save_model(model: IntentModel, path: str | Path) -> None:
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "labels": list(model.labels),
        "weights": model.weights.tolist(),
        "bias": model.bias.tolist(),
        "featurizer": model.featurizer.to_dict(),
        "config": model.config.to_dict(),
    }
    Path(path).write_text(json.dumps(payload, ensure_ascii=False, sort_keys=True), encoding="utf-8")


def load_model(path: str | Path) -> IntentModel:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if data.get("format_version") != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format version: {data.get('format_version')}")
    return IntentModel(
        featurizer=Featurizer.from_dict(data["featurizer"]),
        labels=tuple(data["labels"]),
        weights=np.array(data["weights"]),
        bias=np.array(data["bias"]),
        config=TrainConfig.from_dict(data["config"]),
    )
