"""The three next-action policies and their arbitration.

Priority order is fixed: rules (0) beat memoization (1) beat the learned
policy (2). Arbitration picks the most confident candidate and breaks ties
by priority; rules predict with confidence 1.0, so whenever a rule applies
it wins. A winner below the fallback threshold is replaced by the domain's
ask-to-rephrase action.

The learned policy is a desk-scale stand-in for a transformer next-action
predictor: a softmax classifier over sparse indicators of the recent
(intent, action) history, trained on the domain's stories.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from wolofbot import linmodel
from wolofbot.dialogue.domain import DomainSpec, Story
from wolofbot.dialogue.events import DialogueTracker

ACTION_LISTEN = "action_listen"

RULE_PRIORITY = 0
MEMO_PRIORITY = 1
LEARNED_PRIORITY = 2

Item = tuple[str, str]


@dataclass(frozen=True)
class PolicyPrediction:
    action: str
    confidence: float
    policy: str
    priority: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence must be in [0, 1], got {self.confidence}")


def _turn_context(items: Sequence[Item]) -> tuple[Optional[str], Optional[str], list[str]]:
    """(last user intent, bot action it replied to, actions emitted since)."""
    last_intent_pos = None
    for i in range(len(items) - 1, -1, -1):
        if items[i][0] == "intent":
            last_intent_pos = i
            break
    if last_intent_pos is None:
        return None, None, []
    prev_action = None
    for i in range(last_intent_pos - 1, -1, -1):
        if items[i][0] == "action":
            prev_action = items[i][1]
            break
    since = [name for kind, name in items[last_intent_pos + 1 :] if kind == "action"]
    return items[last_intent_pos][1], prev_action, since


def rule_policy(tracker: DialogueTracker, domain: DomainSpec) -> Optional[PolicyPrediction]:
    """First matching rule in declaration order, with confidence 1.0.

    Once the matched rule's action has run for the current user turn, the
    rule predicts end-of-turn (action_listen) instead of repeating itself.
    """
    items = tracker.items(domain.postback_map)
    last_intent, prev_action, since = _turn_context(items)
    if last_intent is None:
        return None
    for rule in domain.rules:
        if rule.intent != last_intent:
            continue
        if rule.prev_action is not None and rule.prev_action != prev_action:
            continue
        action = ACTION_LISTEN if rule.action in since else rule.action
        return PolicyPrediction(action=action, confidence=1.0, policy="rule", priority=RULE_PRIORITY)
    return None


def story_transitions(steps: Sequence[Item]) -> list[tuple[tuple[Item, ...], str]]:
    """(history, next action) pairs a story implies, including the implicit
    end-of-turn target after each completed bot turn."""
    items = list(steps)
    transitions: list[tuple[tuple[Item, ...], str]] = []
    for i, (kind, name) in enumerate(items):
        if kind == "action":
            transitions.append((tuple(items[:i]), name))
        elif i > 0:
            transitions.append((tuple(items[:i]), ACTION_LISTEN))
    if items:
        transitions.append((tuple(items), ACTION_LISTEN))
    return transitions


@lru_cache(maxsize=32)
def _memo_table(stories: tuple[Story, ...], max_history: int) -> dict[tuple[Item, ...], Optional[str]]:
    """History-suffix -> next action; ambiguous suffixes map to None."""
    table: dict[tuple[Item, ...], Optional[str]] = {}
    for story in stories:
        for history, target in story_transitions(story.steps):
            for h in range(1, min(max_history, len(history)) + 1):
                key = tuple(history[-h:])
                if key in table and table[key] != target:
                    table[key] = None
                else:
                    table[key] = target
    return table


def memoization_policy(tracker: DialogueTracker, domain: DomainSpec) -> Optional[PolicyPrediction]:
    """Exact suffix match against story histories, confidence 1.0.

    Augmented behavior: when the full recent history finds no match, the
    oldest item is dropped and the lookup retried, down to a single item.
    """
    items = tuple(tracker.items(domain.postback_map))
    if not items:
        return None
    table = _memo_table(domain.stories, domain.max_history)
    for h in range(min(domain.max_history, len(items)), 0, -1):
        target = table.get(items[-h:])
        if target is not None:
            return PolicyPrediction(
                action=target, confidence=1.0, policy="memoization", priority=MEMO_PRIORITY
            )
    return None


@dataclass(frozen=True)
class NextActionModel:
    """Softmax next-action classifier over sparse dialogue-state features."""

    actions: tuple[str, ...]
    feature_index: dict[tuple[int, str, str], int]  # (offset-from-end, kind, name)
    weights: np.ndarray
    bias: np.ndarray
    max_history: int

    def _vector(self, items: Sequence[Item]) -> np.ndarray:
        x = np.zeros(len(self.feature_index))
        recent = list(items)[-self.max_history :]
        for offset, (kind, name) in enumerate(reversed(recent)):
            idx = self.feature_index.get((offset, kind, name))
            if idx is not None:
                x[idx] = 1.0
        return x

    def distribution(self, items: Sequence[Item]) -> np.ndarray:
        return linmodel.softmax(self._vector(items) @ self.weights.T + self.bias)


def train_next_action_model(
    domain: DomainSpec,
    seed: int = 7,
    epochs: int = 200,
    learning_rate: float = 0.5,
    l2: float = 1e-3,
) -> NextActionModel:
    """Fit the learned policy on the domain's stories (deterministic)."""
    if not domain.stories:
        raise ValueError("cannot train the learned policy without stories")
    pairs: list[tuple[tuple[Item, ...], str]] = []
    for story in domain.stories:
        pairs.extend(story_transitions(story.steps))

    actions = tuple(sorted(set(domain.actions) | {ACTION_LISTEN}))
    action_index = {a: i for i, a in enumerate(actions)}
    keys = set()
    for history, _ in pairs:
        recent = history[-domain.max_history :]
        for offset, item in enumerate(reversed(recent)):
            keys.add((offset, item[0], item[1]))
    feature_index = {k: i for i, k in enumerate(sorted(keys))}

    model = NextActionModel(
        actions=actions,
        feature_index=feature_index,
        weights=np.zeros((len(actions), len(feature_index))),
        bias=np.zeros(len(actions)),
        max_history=domain.max_history,
    )
    x = np.stack([model._vector(history) for history, _ in pairs])
    y = np.array([action_index[target] for _, target in pairs])
    weights, bias = linmodel.fit(
        x, y, n_classes=len(actions), epochs=epochs, lr=learning_rate, l2=l2, seed=seed
    )
    return NextActionModel(
        actions=actions,
        feature_index=feature_index,
        weights=weights,
        bias=bias,
        max_history=domain.max_history,
    )


def learned_policy(
    model: Optional[NextActionModel], tracker: DialogueTracker, domain: DomainSpec
) -> PolicyPrediction:
    """Always produces a prediction; raises if the model was never trained."""
    if model is None:
        raise ValueError("learned policy model is not trained")
    items = tracker.items(domain.postback_map)
    probs = model.distribution(items)
    ranked = sorted(zip(model.actions, probs.tolist()), key=lambda ap: (-ap[1], ap[0]))
    action, confidence = ranked[0]
    return PolicyPrediction(
        action=action, confidence=confidence, policy="learned", priority=LEARNED_PRIORITY
    )


def arbitrate(
    candidates: Sequence[PolicyPrediction], fallback_threshold: float, fallback_action: str
) -> str:
    """Highest confidence wins; ties go to the higher-priority (lower rank)
    policy; a winner below the threshold yields the fallback action."""
    if not candidates:
        raise ValueError("arbitrate needs at least one candidate")
    best = min(candidates, key=lambda c: (-c.confidence, c.priority))
    if best.confidence < fallback_threshold:
        return fallback_action
    return best.action
