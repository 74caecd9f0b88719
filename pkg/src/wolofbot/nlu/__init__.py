"""Message understanding: sparse featurizers, regex entities, a softmax
intent classifier and the k-fold evaluation harness."""

from wolofbot.nlu.data import IntentDataset, IntentExample, load_dataset
from wolofbot.nlu.features import (
    EntityMatch,
    LexSynFeaturizer,
    RegexPattern,
    SparseVector,
    count_vectors_featurize,
    extract_entities,
    regex_featurize,
)
from wolofbot.nlu.metrics import MetricsReport, cross_validate, metrics_from_confusion
from wolofbot.nlu.model import (
    IntentModel,
    Prediction,
    TrainConfig,
    load_model,
    save_model,
    train_intent_model,
)

__all__ = [
    "IntentExample",
    "IntentDataset",
    "load_dataset",
    "SparseVector",
    "RegexPattern",
    "EntityMatch",
    "count_vectors_featurize",
    "LexSynFeaturizer",
    "extract_entities",
    "regex_featurize",
    "TrainConfig",
    "IntentModel",
    "Prediction",
    "train_intent_model",
    "save_model",
    "load_model",
    "MetricsReport",
    "metrics_from_confusion",
    "cross_validate",
]
