"""Append-only JSONL conversation log and its replay.

Three record types share the file: inbound webhook events, tracker events
(the dialogue-level source of truth) and outbound messages. Tracker events
alone suffice to rebuild every session; the other records make the log a
complete, causally ordered account of the conversation.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Callable, Optional

from wolofbot.dialogue.events import DialogueEvent, DialogueTracker, EventKind


class ConversationLog:
    def __init__(self, path: str | Path, clock: Callable[[], float]):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._clock = clock
        self._lock = threading.Lock()

    def _append(self, record: dict) -> None:
        line = json.dumps(record, ensure_ascii=False, sort_keys=True)
        with self._lock:
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def inbound(self, session_id: str, event: dict) -> None:
        self._append({"type": "inbound", "ts": self._clock(), "session_id": session_id, "event": event})

    def tracker_event(self, session_id: str, event: DialogueEvent) -> None:
        self._append(
            {"type": "tracker_event", "ts": self._clock(), "session_id": session_id, "event": event.to_dict()}
        )

    def outbound(self, session_id: str, message: dict) -> None:
        self._append({"type": "outbound", "ts": self._clock(), "session_id": session_id, "message": message})


def replay_log(path: str | Path) -> dict[str, DialogueTracker]:
    """Rebuild the latest tracker of every session from a conversation log.

    A session_start record opens a fresh lifetime for its session (earlier
    events of an expired incarnation are discarded, as the live store does).
    """
    trackers: dict[str, DialogueTracker] = {}
    text = Path(path).read_text(encoding="utf-8")
    for line in text.splitlines():
        if not line.strip():
            continue
        record = json.loads(line)
        if record.get("type") != "tracker_event":
            continue
        session_id = record["session_id"]
        event = DialogueEvent.from_dict(record["event"])
        if event.kind is EventKind.SESSION_START or session_id not in trackers:
            trackers[session_id] = DialogueTracker(session_id)
        trackers[session_id].append(event)
    return trackers
