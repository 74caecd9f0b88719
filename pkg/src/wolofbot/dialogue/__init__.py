"""Dialogue management: session tracker, three-policy stack with
priority-plus-confidence arbitration, and the pre-recorded response catalog."""

from wolofbot.dialogue.domain import (
    DomainSpec,
    ResponseMessage,
    Rule,
    Story,
    domain_from_dict,
    load_domain,
    split_transcript,
)
from wolofbot.dialogue.engine import DialogueEngine
from wolofbot.dialogue.events import DialogueEvent, DialogueTracker, EventKind
from wolofbot.dialogue.policies import (
    ACTION_LISTEN,
    NextActionModel,
    PolicyPrediction,
    arbitrate,
    learned_policy,
    memoization_policy,
    rule_policy,
    train_next_action_model,
)

__all__ = [
    "EventKind",
    "DialogueEvent",
    "DialogueTracker",
    "Rule",
    "Story",
    "ResponseMessage",
    "DomainSpec",
    "load_domain",
    "domain_from_dict",
    "split_transcript",
    "PolicyPrediction",
    "ACTION_LISTEN",
    "rule_policy",
    "memoization_policy",
    "learned_policy",
    "NextActionModel",
    "train_next_action_model",
    "arbitrate",
    "DialogueEngine",
]
