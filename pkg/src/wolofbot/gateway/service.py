"""HTTP gateway: webhook, audio serving and health.

POST /webhook      {session_id, kind: text|voice|postback, payload, ts?}
                   -> {"messages": [{kind, body}, ...]}
GET  /audio/{id}   stored audio bytes, bit-exact
GET  /health       {"status", "versions", "sessions"}

Voice events pass through the ASR adapter and echo the transcript back
(asr_echo) before understanding; text goes straight to the NLU; postbacks
bypass it entirely. An unknown or expired session is recreated on contact,
so the first reply always opens with the greeting. Everything in and out
is appended to the JSONL conversation log.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Literal, Optional

from fastapi import FastAPI, HTTPException, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from wolofbot import __version__
from wolofbot.dialogue.domain import DomainSpec, ResponseMessage, load_domain
from wolofbot.dialogue.engine import DialogueEngine
from wolofbot.dialogue.events import DialogueEvent
from wolofbot.gateway.asr import make_adapter
from wolofbot.gateway.journal import ConversationLog
from wolofbot.gateway.sessions import SessionStore
from wolofbot.nlu.model import IntentModel, load_model

_ASSET_ID = re.compile(r"[A-Za-z0-9_-]+")


def packaged_domain_path() -> Path:
    return Path(str(resources.files("wolofbot.data") / "sargal_domain.json"))


def packaged_audio_dir() -> Path:
    return Path(str(resources.files("wolofbot.data") / "audio"))


@dataclass
class GatewayConfig:
    nlu_model_path: Optional[str] = None
    domain_path: Optional[str] = None
    audio_dir: Optional[str] = None
    log_path: str = "conversations.jsonl"
    adapter: str = "identity"
    simulated_wer: float = 0.22
    noise_seed: int = 0
    session_ttl: float = 1800.0
    policy_seed: int = 7


class InboundEvent(BaseModel):
    session_id: str = Field(min_length=1)
    kind: Literal["text", "voice", "postback"]
    payload: str
    ts: Optional[float] = None


def _response_messages(response: ResponseMessage) -> list[dict]:
    messages: list[dict] = []
    if response.audio_id:
        messages.append({"kind": "audio", "body": f"/audio/{response.audio_id}"})
    for part in response.parts:
        messages.append({"kind": "text", "body": part})
    if response.buttons:
        messages.append(
            {"kind": "buttons", "body": [{"title": t, "payload": p} for t, p in response.buttons]}
        )
    return messages


def create_app(
    config: Optional[GatewayConfig] = None,
    *,
    model: Optional[IntentModel] = None,
    domain: Optional[DomainSpec] = None,
    clock: Callable[[], float] = time.time,
) -> FastAPI:
    config = config or GatewayConfig()
    if model is None and config.nlu_model_path:
        model = load_model(config.nlu_model_path)
    if domain is None:
        domain = load_domain(config.domain_path or packaged_domain_path())

    audio_dir = Path(config.audio_dir) if config.audio_dir else packaged_audio_dir()
    missing = [a for a in domain.audio_ids() if not (audio_dir / f"{a}.wav").is_file()]
    if missing:
        raise ValueError(f"domain references audio assets with no file in {audio_dir}: {missing}")

    engine = DialogueEngine.from_domain(domain, seed=config.policy_seed, clock=clock)
    adapter = make_adapter(
        config.adapter,
        wer=config.simulated_wer,
        seed=config.noise_seed,
        vocab=model.featurizer.vocab if model is not None else None,
    )
    store = SessionStore(ttl_seconds=config.session_ttl, clock=clock)
    log = ConversationLog(config.log_path, clock=clock)

    app = FastAPI(title="wolofbot gateway", version=__version__)
    # the chat UI is served from a static origin during development
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.config = config
    app.state.model = model
    app.state.domain = domain
    app.state.engine = engine
    app.state.store = store
    app.state.log = log
    app.state.adapter = adapter

    @app.post("/webhook")
    def webhook(event: InboundEvent) -> dict:
        if model is None:
            raise HTTPException(status_code=503, detail="NLU model not loaded")
        session_id = event.session_id
        with store.session_lock(session_id):
            log.inbound(session_id, event.model_dump())
            outbound: list[dict] = []

            entry = store.lookup(session_id)
            if entry is None:
                tracker, greetings = engine.start_session(session_id)
                entry = store.put(session_id, tracker)
                for ev in tracker.events:
                    log.tracker_event(session_id, ev)
                for response in greetings:
                    outbound.extend(_response_messages(response))
            tracker = entry.tracker
            events_before = len(tracker.events)

            if event.kind == "voice":
                transcript = adapter.transcribe(event.payload, session_id, tracker.turn_count)
                outbound.append({"kind": "asr_echo", "body": transcript})
                prediction = model.predict(transcript)
                user_event = DialogueEvent.user_intent(
                    prediction.intent, prediction.confidence, transcript, ts=clock()
                )
            elif event.kind == "text":
                prediction = model.predict(event.payload)
                user_event = DialogueEvent.user_intent(
                    prediction.intent, prediction.confidence, event.payload, ts=clock()
                )
            else:
                user_event = DialogueEvent.postback(event.payload, ts=clock())

            responses = engine.advance(tracker, user_event)
            for ev in tracker.events[events_before:]:
                log.tracker_event(session_id, ev)
            for response in responses:
                outbound.extend(_response_messages(response))
            store.touch(session_id)
            for message in outbound:
                log.outbound(session_id, message)
            return {"messages": outbound}

    @app.get("/audio/{asset_id}")
    def serve_audio(asset_id: str) -> Response:
        if not _ASSET_ID.fullmatch(asset_id) or asset_id not in domain.audio_ids():
            raise HTTPException(status_code=404, detail=f"unknown audio asset {asset_id!r}")
        path = audio_dir / f"{asset_id}.wav"
        if not path.is_file():
            raise HTTPException(status_code=404, detail=f"audio asset {asset_id!r} missing on disk")
        return Response(content=path.read_bytes(), media_type="audio/wav")

    @app.get("/health")
    def healthcheck() -> dict:
        return {
            "status": "ok" if model is not None else "degraded",
            "versions": {
                "service": __version__,
                "nlu_labels": list(model.labels) if model is not None else None,
                "domain_actions": len(domain.responses),
            },
            "sessions": store.active_count(),
        }

    return app
