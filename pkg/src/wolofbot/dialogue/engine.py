"""Conversation engine: advances a session tracker through the policy
stack and resolves the chosen actions to catalog responses.

Each user turn runs the action loop: predict, arbitrate, execute, until a
policy predicts end-of-turn. After an informational answer the stories
make the bot ask the follow-up question that carries the three quick-reply
buttons, and the session always opens with the greeting."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from wolofbot.dialogue.domain import DomainSpec, ResponseMessage
from wolofbot.dialogue.events import DialogueEvent, DialogueTracker, EventKind
from wolofbot.dialogue.policies import (
    ACTION_LISTEN,
    NextActionModel,
    arbitrate,
    learned_policy,
    memoization_policy,
    rule_policy,
    train_next_action_model,
)

MAX_ACTIONS_PER_TURN = 8


@dataclass
class DialogueEngine:
    domain: DomainSpec
    policy_model: Optional[NextActionModel] = None
    clock: Callable[[], float] = time.time

    @classmethod
    def from_domain(cls, domain: DomainSpec, seed: int = 7, clock: Callable[[], float] = time.time) -> "DialogueEngine":
        return cls(domain=domain, policy_model=train_next_action_model(domain, seed=seed), clock=clock)

    def start_session(self, session_id: str) -> tuple[DialogueTracker, list[ResponseMessage]]:
        """Create a tracker and open the conversation with the greeting."""
        tracker = DialogueTracker(session_id)
        tracker.append(DialogueEvent.session_start(ts=self.clock()))
        greeting = self.domain.greeting_action
        tracker.append(DialogueEvent.bot_action(greeting, ts=self.clock()))
        return tracker, [self.domain.response_for(greeting)]

    def advance(self, tracker: DialogueTracker, incoming: DialogueEvent) -> list[ResponseMessage]:
        """Append the user event, run the policy loop, resolve responses."""
        if incoming.kind not in (EventKind.USER_INTENT, EventKind.POSTBACK):
            raise ValueError(f"advance expects a user event, got {incoming.kind}")
        tracker.append(incoming)

        if incoming.kind is EventKind.POSTBACK and incoming.payload not in self.domain.postback_map:
            return [self._execute(tracker, self.domain.fallback_action)]

        responses: list[ResponseMessage] = []
        executed: set[str] = set()
        for _ in range(MAX_ACTIONS_PER_TURN):
            candidates = [learned_policy(self.policy_model, tracker, self.domain)]
            memo = memoization_policy(tracker, self.domain)
            if memo is not None:
                candidates.append(memo)
            rule = rule_policy(tracker, self.domain)
            if rule is not None:
                candidates.append(rule)
            action = arbitrate(candidates, self.domain.fallback_threshold, self.domain.fallback_action)
            if action == ACTION_LISTEN or action in executed:
                break
            responses.append(self._execute(tracker, action))
            executed.add(action)
            if action == self.domain.fallback_action:
                break
        if not responses:
            responses.append(self._execute(tracker, self.domain.fallback_action))
        return responses

    def _execute(self, tracker: DialogueTracker, action: str) -> ResponseMessage:
        tracker.append(DialogueEvent.bot_action(action, ts=self.clock()))
        return self.domain.response_for(action)
