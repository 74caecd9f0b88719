"""Session event log: the single source of truth for dialogue state.

A tracker is an append-only, totally ordered list of events; every piece
of derived state (last intent, last action, turn count) is a pure function
of that list, so replaying a persisted log reproduces the session exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Optional

UNKNOWN_INTENT = "__unknown__"


class EventKind(str, Enum):
    SESSION_START = "session_start"
    USER_INTENT = "user_intent"
    BOT_ACTION = "bot_action"
    POSTBACK = "postback"


@dataclass(frozen=True)
class DialogueEvent:
    kind: EventKind
    timestamp: float = 0.0
    intent: Optional[str] = None
    confidence: Optional[float] = None
    text: Optional[str] = None
    action: Optional[str] = None
    payload: Optional[str] = None

    @classmethod
    def session_start(cls, ts: float = 0.0) -> "DialogueEvent":
        return cls(kind=EventKind.SESSION_START, timestamp=ts)

    @classmethod
    def user_intent(cls, intent: str, confidence: float, text: str, ts: float = 0.0) -> "DialogueEvent":
        return cls(kind=EventKind.USER_INTENT, timestamp=ts, intent=intent, confidence=confidence, text=text)

    @classmethod
    def bot_action(cls, action: str, ts: float = 0.0) -> "DialogueEvent":
        return cls(kind=EventKind.BOT_ACTION, timestamp=ts, action=action)

    @classmethod
    def postback(cls, payload: str, ts: float = 0.0) -> "DialogueEvent":
        return cls(kind=EventKind.POSTBACK, timestamp=ts, payload=payload)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind.value, "ts": self.timestamp}
        for name in ("intent", "confidence", "text", "action", "payload"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out

    @classmethod
    def from_dict(cls, data: Mapping) -> "DialogueEvent":
        return cls(
            kind=EventKind(data["kind"]),
            timestamp=float(data.get("ts", 0.0)),
            intent=data.get("intent"),
            confidence=data.get("confidence"),
            text=data.get("text"),
            action=data.get("action"),
            payload=data.get("payload"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True)


class DialogueTracker:
    """Per-session ordered event log with derived conversational state."""

    def __init__(self, session_id: str):
        if not session_id:
            raise ValueError("session_id must be non-empty")
        self.session_id = session_id
        self.events: list[DialogueEvent] = []

    def append(self, event: DialogueEvent) -> None:
        if not self.events and event.kind is not EventKind.SESSION_START:
            raise ValueError("first tracker event must be session_start")
        if self.events and event.kind is EventKind.SESSION_START:
            raise ValueError("session_start must be the first event")
        self.events.append(event)

    @classmethod
    def replay(cls, session_id: str, events: Iterable[DialogueEvent]) -> "DialogueTracker":
        tracker = cls(session_id)
        for event in events:
            tracker.append(event)
        return tracker

    # -- derived state ------------------------------------------------

    @property
    def turn_count(self) -> int:
        """Number of user turns (spoken/typed intents and button postbacks)."""
        return sum(1 for e in self.events if e.kind in (EventKind.USER_INTENT, EventKind.POSTBACK))

    @property
    def last_action(self) -> Optional[str]:
        for event in reversed(self.events):
            if event.kind is EventKind.BOT_ACTION:
                return event.action
        return None

    def items(self, postback_map: Mapping[str, str]) -> list[tuple[str, str]]:
        """Canonical (kind, name) view consumed by the policies.

        Postbacks surface as intents through the domain's payload map;
        unknown payloads become a sentinel no story or rule refers to.
        """
        out: list[tuple[str, str]] = []
        for event in self.events:
            if event.kind is EventKind.USER_INTENT:
                out.append(("intent", event.intent or UNKNOWN_INTENT))
            elif event.kind is EventKind.POSTBACK:
                out.append(("intent", postback_map.get(event.payload or "", UNKNOWN_INTENT)))
            elif event.kind is EventKind.BOT_ACTION:
                out.append(("action", event.action or ""))
        return out

    def to_json_lines(self) -> str:
        return "".join(e.to_json() + "\n" for e in self.events)
