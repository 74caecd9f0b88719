"""ASR adapters for the voice path.

Real decoding is out of scope; the gateway either passes the payload
through as the transcript (identity) or degrades it through the noise
channel at a configured WER (simulated). Simulated transcription must be a
pure function of the event, not of call history, so that replaying a log
reproduces identical sessions: the per-event RNG is derived by hashing
(seed, session, turn, payload).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from wolofbot.speech.noise import NoiseConfig, corrupt
from wolofbot.textcore import Vocab, detokenize, normalize, tokenize


@dataclass(frozen=True)
class IdentityAsr:
    name: str = "identity"

    def transcribe(self, payload: str, session_id: str, turn_index: int) -> str:
        return payload


@dataclass(frozen=True)
class SimulatedAsr:
    wer: float
    seed: int
    vocab: Vocab
    name: str = "simulated"

    def transcribe(self, payload: str, session_id: str, turn_index: int) -> str:
        tokens = tokenize(normalize(payload))
        digest = hashlib.sha256(
            f"{self.seed}:{session_id}:{turn_index}:{payload}".encode("utf-8")
        ).digest()
        rng = np.random.default_rng(np.frombuffer(digest, dtype=np.uint64))
        cfg = NoiseConfig(target_wer=self.wer, seed=self.seed, vocab=self.vocab)
        return detokenize(corrupt(tokens, cfg, rng=rng))


def make_adapter(name: str, wer: float = 0.22, seed: int = 0, vocab: Vocab | None = None):
    if name == "identity":
        return IdentityAsr()
    if name == "simulated":
        if vocab is None:
            raise ValueError("simulated ASR adapter needs a substitution vocabulary")
        return SimulatedAsr(wer=wer, seed=seed, vocab=vocab)
    raise ValueError(f"unknown ASR adapter {name!r} (expected 'identity' or 'simulated')")
