#!/usr/bin/env python3
"""Generate placeholder audio assets for the response catalog.

Real recordings by a Wolof speaker are out of scope here; each asset is a
short mono 8 kHz WAV tone with a per-asset frequency so files are small,
distinguishable and bit-stable (no randomness).

Writes src/wolofbot/data/audio/<asset>.wav for every audio_id in the domain.
"""

from __future__ import annotations

import json
import math
import struct
import wave
from pathlib import Path

SAMPLE_RATE = 8000
DURATION_S = 0.35
BASE_FREQ = 440.0


def write_tone(path: Path, freq: float) -> None:
    n = int(SAMPLE_RATE * DURATION_S)
    frames = bytearray()
    for i in range(n):
        envelope = min(1.0, i / 200, (n - i) / 200)  # short fade in/out, no clicks
        value = int(12000 * envelope * math.sin(2 * math.pi * freq * i / SAMPLE_RATE))
        frames += struct.pack("<h", value)
    with wave.open(str(path), "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(SAMPLE_RATE)
        w.writeframes(bytes(frames))


def main() -> None:
    root = Path(__file__).resolve().parents[1] / "src" / "wolofbot" / "data"
    domain = json.loads((root / "sargal_domain.json").read_text(encoding="utf-8"))
    audio_ids = sorted(
        {spec["audio_id"] for spec in domain["responses"].values() if spec.get("audio_id")}
    )
    out_dir = root / "audio"
    out_dir.mkdir(exist_ok=True)
    for i, asset in enumerate(audio_ids):
        write_tone(out_dir / f"{asset}.wav", BASE_FREQ * (2 ** (i / 12)))
    print(f"wrote {len(audio_ids)} assets to {out_dir}")


if __name__ == "__main__":
    main()
