"""Intent training data: labeled examples plus regex definitions.

File format (JSON):
    {"intents": [{"name": ..., "examples": [...]}, ...],
     "regexes": [{"name": ..., "pattern": ...}, ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from wolofbot.nlu.features import RegexPattern, check_unique_names
from wolofbot.textcore import normalize


@dataclass(frozen=True)
class IntentExample:
    text: str
    intent: str

    def __post_init__(self) -> None:
        if not self.intent:
            raise ValueError("intent label must be non-empty")
        if not normalize(self.text):
            raise ValueError(f"example text is empty after normalization: {self.text!r}")


@dataclass(frozen=True)
class IntentDataset:
    examples: tuple[IntentExample, ...]
    patterns: tuple[RegexPattern, ...] = ()

    def __post_init__(self) -> None:
        check_unique_names(self.patterns)

    def __len__(self) -> int:
        return len(self.examples)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted({e.intent for e in self.examples}))

    def counts_by_label(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for e in self.examples:
            out[e.intent] = out.get(e.intent, 0) + 1
        return out


def dataset_from_dict(data: dict) -> IntentDataset:
    examples = []
    for block in data.get("intents", []):
        for text in block["examples"]:
            examples.append(IntentExample(text=text, intent=block["name"]))
    patterns = tuple(
        RegexPattern(r["name"], r["pattern"]) for r in data.get("regexes", [])
    )
    return IntentDataset(examples=tuple(examples), patterns=patterns)


def load_dataset(path: str | Path) -> IntentDataset:
    return dataset_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
