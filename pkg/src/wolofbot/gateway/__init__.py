"""Messenger-like webhook gateway: HTTP surface, ASR adapters, session
store and replayable JSONL conversation logging."""

from wolofbot.gateway.asr import IdentityAsr, SimulatedAsr, make_adapter
from wolofbot.gateway.journal import ConversationLog, replay_log
from wolofbot.gateway.service import GatewayConfig, create_app
from wolofbot.gateway.sessions import SessionStore

__all__ = [
    "IdentityAsr",
    "SimulatedAsr",
    "make_adapter",
    "ConversationLog",
    "replay_log",
    "SessionStore",
    "GatewayConfig",
    "create_app",
]
