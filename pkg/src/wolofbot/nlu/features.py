"""Sparse featurizers feeding the intent classifier.

Three feature blocks, concatenated: bag-of-words counts over a fitted
vocabulary (optionally extended with hashed character n-grams), window
lexical/shape indicators with a mapping frozen at fit time, and one binary
feature per configured regex pattern. The regex patterns double as entity
extractors.
"""

from __future__ import annotations

import re
import zlib
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from wolofbot.textcore import Vocab


@dataclass(frozen=True)
class SparseVector:
    """Sparse real vector: index -> weight, no explicit zeros stored."""

    dim: int
    entries: dict[int, float]

    def __post_init__(self) -> None:
        for i, w in self.entries.items():
            if not 0 <= i < self.dim:
                raise ValueError(f"index {i} out of range for dimension {self.dim}")
            if w == 0:
                raise ValueError(f"explicit zero stored at index {i}")

    def __add__(self, other: "SparseVector") -> "SparseVector":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {other.dim}")
        merged = dict(self.entries)
        for i, w in other.entries.items():
            s = merged.get(i, 0.0) + w
            if s == 0:
                merged.pop(i, None)
            else:
                merged[i] = s
        return SparseVector(self.dim, merged)

    def concat(self, other: "SparseVector") -> "SparseVector":
        merged = dict(self.entries)
        for i, w in other.entries.items():
            merged[i + self.dim] = w
        return SparseVector(self.dim + other.dim, merged)

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.dim)
        for i, w in self.entries.items():
            out[i] = w
        return out

    @classmethod
    def empty(cls, dim: int) -> "SparseVector":
        return cls(dim, {})


def count_vectors_featurize(
    tokens: Sequence[str],
    vocab: Vocab,
    char_ngram_range: tuple[int, int] | None = None,
    char_buckets: int = 256,
) -> SparseVector:
    """Token counts at vocabulary indices; unknown tokens count at OOV.

    With char_ngram_range=(lo, hi), hashed character n-gram counts are
    appended in a separate bucket range after the vocabulary block.
    """
    dim = len(vocab)
    counts: dict[int, float] = {}
    for tok in tokens:
        i = vocab.index(tok)
        counts[i] = counts.get(i, 0.0) + 1.0
    if char_ngram_range is not None:
        lo, hi = char_ngram_range
        if not 1 <= lo <= hi:
            raise ValueError(f"invalid char n-gram range {char_ngram_range}")
        for tok in tokens:
            for n in range(lo, hi + 1):
                for start in range(0, max(0, len(tok) - n + 1)):
                    gram = tok[start : start + n]
                    bucket = dim + zlib.crc32(gram.encode("utf-8")) % char_buckets
                    counts[bucket] = counts.get(bucket, 0.0) + 1.0
        dim += char_buckets
    return SparseVector(dim, counts)


def _token_shape_features(token: str) -> list[tuple[str, str]]:
    feats = [
        ("prefix2", token[:2]),
        ("suffix2", token[-2:]),
        ("suffix3", token[-3:]),
    ]
    if any(ch.isdigit() for ch in token):
        feats.append(("digit", "1"))
    return feats


def _window_keys(tokens: Sequence[str], window: int) -> list[tuple[int, str, str]]:
    keys: list[tuple[int, str, str]] = []
    n = len(tokens)
    for i in range(n):
        for rel in range(-window, window + 1):
            j = i + rel
            if not 0 <= j < n:
                continue
            for name, value in _token_shape_features(tokens[j]):
                keys.append((rel, name, value))
            if j == 0:
                keys.append((rel, "bos", "1"))
            if j == n - 1:
                keys.append((rel, "eos", "1"))
    return keys


@dataclass(frozen=True)
class LexSynFeaturizer:
    """Window lexical/shape featurizer with a mapping frozen at fit time."""

    window: int
    feature_index: dict[tuple[int, str, str], int]

    @classmethod
    def fit(cls, corpus: Iterable[Sequence[str]], window: int = 1) -> "LexSynFeaturizer":
        if window < 0:
            raise ValueError(f"window must be >= 0, got {window}")
        seen = set()
        for tokens in corpus:
            seen.update(_window_keys(tokens, window))
        ordered = sorted(seen)
        return cls(window=window, feature_index={k: i for i, k in enumerate(ordered)})

    @property
    def dim(self) -> int:
        return len(self.feature_index)

    def transform(self, tokens: Sequence[str]) -> SparseVector:
        weights: dict[int, float] = {}
        for key in _window_keys(tokens, self.window):
            idx = self.feature_index.get(key)
            if idx is not None:
                weights[idx] = weights.get(idx, 0.0) + 1.0
        return SparseVector(self.dim, weights)

    def to_dict(self) -> dict:
        ordered = sorted(self.feature_index, key=self.feature_index.get)
        return {"window": self.window, "features": [list(k) for k in ordered]}

    @classmethod
    def from_dict(cls, data: dict) -> "LexSynFeaturizer":
        index = {(int(r), n, v): i for i, (r, n, v) in enumerate(data["features"])}
        return cls(window=int(data["window"]), feature_index=index)


class RegexPattern:
    """Named regular expression; compiles at construction, never at predict time."""

    def __init__(self, name: str, pattern: str):
        if not name:
            raise ValueError("pattern name must be non-empty")
        try:
            self.regex = re.compile(pattern)
        except re.error as exc:
            raise ValueError(f"regex pattern {name!r} does not compile: {exc}") from exc
        self.name = name
        self.pattern = pattern

    def __repr__(self) -> str:
        return f"RegexPattern({self.name!r}, {self.pattern!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RegexPattern)
            and (self.name, self.pattern) == (other.name, other.pattern)
        )

    def __hash__(self) -> int:
        return hash((self.name, self.pattern))


def check_unique_names(patterns: Sequence[RegexPattern]) -> None:
    names = [p.name for p in patterns]
    dupes = sorted({n for n in names if names.count(n) > 1})
    if dupes:
        raise ValueError(f"duplicate regex pattern names: {dupes}")


@dataclass(frozen=True)
class EntityMatch:
    entity: str
    surface: str
    start: int
    end: int

    def to_dict(self) -> dict:
        return {"entity": self.entity, "surface": self.surface, "start": self.start, "end": self.end}


def extract_entities(text: str, patterns: Sequence[RegexPattern]) -> list[EntityMatch]:
    """Leftmost non-overlapping matches of every pattern, with exact spans."""
    matches = []
    for pat in patterns:
        for m in pat.regex.finditer(text):
            matches.append(EntityMatch(entity=pat.name, surface=m.group(0), start=m.start(), end=m.end()))
    return matches


def regex_featurize(text: str, patterns: Sequence[RegexPattern]) -> SparseVector:
    """One binary feature per pattern: 1.0 when the pattern matches anywhere."""
    entries = {
        i: 1.0 for i, pat in enumerate(patterns) if pat.regex.search(text) is not None
    }
    return SparseVector(len(patterns), entries)
