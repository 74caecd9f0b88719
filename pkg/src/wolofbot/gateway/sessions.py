"""In-memory session store with TTL expiry and per-session serialization.

Requests for different sessions proceed in parallel; requests for the same
session are serialized through its lock, which also makes first-contact
session creation idempotent (the second racer finds the session created).
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass
from typing import Callable, Optional

from wolofbot.dialogue.events import DialogueTracker


@dataclass
class SessionEntry:
    tracker: DialogueTracker
    last_active: float


class SessionStore:
    def __init__(self, ttl_seconds: float = 1800.0, clock: Callable[[], float] = time.time):
        self.ttl_seconds = ttl_seconds
        self._clock = clock
        self._entries: dict[str, SessionEntry] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._store_lock = threading.Lock()

    def session_lock(self, session_id: str) -> threading.Lock:
        with self._store_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def _expired(self, entry: SessionEntry) -> bool:
        return self._clock() - entry.last_active > self.ttl_seconds

    def lookup(self, session_id: str) -> Optional[SessionEntry]:
        """Live entry for the session, or None if absent/expired."""
        with self._store_lock:
            entry = self._entries.get(session_id)
            if entry is None or self._expired(entry):
                return None
            return entry

    def put(self, session_id: str, tracker: DialogueTracker) -> SessionEntry:
        entry = SessionEntry(tracker=tracker, last_active=self._clock())
        with self._store_lock:
            self._entries[session_id] = entry
        return entry

    def touch(self, session_id: str) -> None:
        with self._store_lock:
            entry = self._entries.get(session_id)
            if entry is not None:
                entry.last_active = self._clock()

    def active_count(self) -> int:
        with self._store_lock:
            return sum(1 for e in self._entries.values() if not self._expired(e))

    def active_trackers(self) -> dict[str, DialogueTracker]:
        with self._store_lock:
            return {
                sid: e.tracker for sid, e in self._entries.items() if not self._expired(e)
            }
