"""Parameterized ASR-noise channel.

Corrupts token streams i.i.d. per token so that the measured corpus WER
against the clean input converges to a requested target rate. Used to
replay, at desk scale, the degradation a real recognizer inflicts on the
understanding stage.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from wolofbot.textcore import Vocab


@dataclass(frozen=True)
class NoiseConfig:
    """target_wer: per-token corruption probability; mix: (sub, del, ins)."""

    target_wer: float
    mix: tuple[float, float, float] = (0.6, 0.2, 0.2)
    seed: int = 0
    vocab: Vocab | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.target_wer <= 1.0:
            raise ValueError(f"target_wer must be in [0, 1], got {self.target_wer}")
        if len(self.mix) != 3 or any(p < 0 for p in self.mix):
            raise ValueError(f"mix must be three non-negative probabilities, got {self.mix}")
        if abs(sum(self.mix) - 1.0) > 1e-9:
            raise ValueError(f"mix must sum to 1, got {self.mix}")

    def to_dict(self) -> dict:
        return {
            "target_wer": self.target_wer,
            "mix": {"sub": self.mix[0], "del": self.mix[1], "ins": self.mix[2]},
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict, vocab: Vocab | None = None) -> "NoiseConfig":
        mix = data.get("mix", {})
        return cls(
            target_wer=float(data["target_wer"]),
            mix=(float(mix.get("sub", 0.6)), float(mix.get("del", 0.2)), float(mix.get("ins", 0.2))),
            seed=int(data.get("seed", 0)),
            vocab=vocab,
        )

    @classmethod
    def from_file(cls, path: str | Path, vocab: Vocab | None = None) -> "NoiseConfig":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")), vocab=vocab)


def _substitution_pool(cfg: NoiseConfig) -> tuple[str, ...]:
    if cfg.vocab is None:
        raise ValueError("NoiseConfig.vocab is required when sub/ins probabilities are non-zero")
    pool = cfg.vocab.known_tokens()
    if not pool:
        raise ValueError("substitution vocabulary is empty")
    return pool


def corrupt(tokens: Sequence[str], cfg: NoiseConfig, rng: np.random.Generator | None = None) -> list[str]:
    """Corrupt a token sequence at cfg.target_wer.

    Each token is independently left intact with probability 1 - target_wer;
    otherwise one error is injected, the kind drawn from cfg.mix:
    SUB replaces the token with a different vocabulary token, DEL drops it,
    INS keeps it and appends a random vocabulary token. Deterministic for a
    fixed seed; pass an explicit rng to share a stream across calls.
    """
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    if cfg.target_wer == 0.0:
        return list(tokens)
    p_sub, p_del, _ = cfg.mix
    pool: tuple[str, ...] | None = None
    if cfg.mix[0] > 0 or cfg.mix[2] > 0:
        pool = _substitution_pool(cfg)

    out: list[str] = []
    for tok in tokens:
        if rng.random() >= cfg.target_wer:
            out.append(tok)
            continue
        u = rng.random()
        if u < p_sub:
            out.append(_draw_other(pool, tok, rng))  # type: ignore[arg-type]
        elif u < p_sub + p_del:
            pass
        else:
            out.append(tok)
            out.append(pool[rng.integers(len(pool))])  # type: ignore[index]
    return out


def _draw_other(pool: tuple[str, ...], original: str, rng: np.random.Generator) -> str:
    """Uniform draw from the pool excluding the original token."""
    if len(pool) == 1 and pool[0] == original:
        return pool[0]
    while True:
        cand = pool[rng.integers(len(pool))]
        if cand != original:
            return cand
