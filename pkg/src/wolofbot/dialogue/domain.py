"""Domain definition: intents, actions, rules, stories and the response
catalog, loaded from a single JSON file and validated for referential
integrity (every action a rule or story mentions must have a response).

Long transcripts are split into short consecutive messages at load time:
compact bubbles are easier to follow than one wall of text.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence

_SENTENCE_BOUNDARY = re.compile(r"(?<=[.!?…])\s+")


def split_transcript(text: str, max_len: int = 120) -> list[str]:
    """Split text into chunks of at most max_len characters.

    Sentences are packed greedily; a sentence longer than max_len is
    wrapped at the last word boundary before the limit. Joining the chunks
    with single spaces reconstructs the whitespace-normalized input (words
    are never broken, so a single word longer than max_len stays intact).
    """
    if max_len < 20:
        raise ValueError(f"max_len must be >= 20, got {max_len}")
    norm = " ".join(text.split())
    if not norm:
        return []

    pieces: list[str] = []
    for sentence in _SENTENCE_BOUNDARY.split(norm):
        while len(sentence) > max_len:
            cut = sentence.rfind(" ", 0, max_len + 1)
            if cut <= 0:
                break  # unbreakable word; keep it whole
            pieces.append(sentence[:cut])
            sentence = sentence[cut + 1 :]
        pieces.append(sentence)

    chunks: list[str] = []
    current = ""
    for piece in pieces:
        if not current:
            current = piece
        elif len(current) + 1 + len(piece) <= max_len:
            current = current + " " + piece
        else:
            chunks.append(current)
            current = piece
    if current:
        chunks.append(current)
    return chunks


@dataclass(frozen=True)
class Rule:
    """Maps a user intent (optionally conditioned on the bot action it
    answers) to the next action. Evaluated in declaration order."""

    intent: str
    action: str
    prev_action: Optional[str] = None


@dataclass(frozen=True)
class Story:
    name: str
    steps: tuple[tuple[str, str], ...]  # ("intent" | "action", name)

    def __post_init__(self) -> None:
        for kind, _ in self.steps:
            if kind not in ("intent", "action"):
                raise ValueError(f"story {self.name!r} has invalid step kind {kind!r}")
        if self.steps and self.steps[0][0] != "intent":
            raise ValueError(f"story {self.name!r} must start with an intent step")


@dataclass(frozen=True)
class ResponseMessage:
    """A bot reply: optional pre-recorded audio, its transcript (split into
    short consecutive texts) and optional quick-reply buttons."""

    action: str
    transcript: str
    parts: tuple[str, ...]
    audio_id: Optional[str] = None
    buttons: Optional[tuple[tuple[str, str], ...]] = None  # (title, payload)


@dataclass(frozen=True)
class DomainSpec:
    intents: tuple[str, ...]
    rules: tuple[Rule, ...]
    stories: tuple[Story, ...]
    responses: dict[str, ResponseMessage]
    greeting_action: str
    fallback_action: str
    fallback_threshold: float = 0.3
    postback_map: dict[str, str] = field(default_factory=dict)
    max_history: int = 5
    max_transcript_len: int = 120

    def __post_init__(self) -> None:
        intents = set(self.intents)
        referenced_actions = {self.greeting_action, self.fallback_action}
        referenced_intents = set()
        for rule in self.rules:
            referenced_actions.add(rule.action)
            if rule.prev_action:
                referenced_actions.add(rule.prev_action)
            referenced_intents.add(rule.intent)
        for story in self.stories:
            for kind, name in story.steps:
                (referenced_actions if kind == "action" else referenced_intents).add(name)

        missing_actions = sorted(referenced_actions - set(self.responses))
        if missing_actions:
            raise ValueError(f"actions without a catalog response: {missing_actions}")
        unknown_intents = sorted(referenced_intents - intents)
        if unknown_intents:
            raise ValueError(f"rules/stories reference undeclared intents: {unknown_intents}")
        bad_postbacks = sorted(i for i in self.postback_map.values() if i not in intents)
        if bad_postbacks:
            raise ValueError(f"postback payloads map to undeclared intents: {bad_postbacks}")
        if not 0.0 <= self.fallback_threshold <= 1.0:
            raise ValueError(f"fallback threshold must be in [0, 1], got {self.fallback_threshold}")
        for message in self.responses.values():
            if message.buttons is not None and not 1 <= len(message.buttons) <= 3:
                raise ValueError(f"response {message.action!r} must carry 1-3 buttons")

    @property
    def actions(self) -> tuple[str, ...]:
        return tuple(sorted(self.responses))

    def response_for(self, action: str) -> ResponseMessage:
        return self.responses[action]

    def audio_ids(self) -> tuple[str, ...]:
        return tuple(sorted({m.audio_id for m in self.responses.values() if m.audio_id}))


def domain_from_dict(data: Mapping) -> DomainSpec:
    max_len = int(data.get("max_transcript_len", 120))
    responses = {}
    for action, spec in data["responses"].items():
        transcript = spec["transcript"]
        buttons = spec.get("buttons")
        responses[action] = ResponseMessage(
            action=action,
            transcript=transcript,
            parts=tuple(split_transcript(transcript, max_len)),
            audio_id=spec.get("audio_id"),
            buttons=tuple((t, p) for t, p in buttons) if buttons else None,
        )
    declared = data.get("actions")
    if declared is not None and sorted(declared) != sorted(responses):
        raise ValueError(
            "declared action list does not match the response catalog: "
            f"{sorted(set(declared) ^ set(responses))}"
        )
    return DomainSpec(
        intents=tuple(data["intents"]),
        rules=tuple(
            Rule(intent=r["intent"], action=r["action"], prev_action=r.get("prev_action"))
            for r in data.get("rules", [])
        ),
        stories=tuple(
            Story(name=s["name"], steps=tuple((k, n) for k, n in s["steps"]))
            for s in data.get("stories", [])
        ),
        responses=responses,
        greeting_action=data["greeting_action"],
        fallback_action=data["fallback"]["action"],
        fallback_threshold=float(data["fallback"].get("threshold", 0.3)),
        postback_map=dict(data.get("postbacks", {})),
        max_history=int(data.get("max_history", 5)),
        max_transcript_len=max_len,
    )


def load_domain(path: str | Path) -> DomainSpec:
    return domain_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
