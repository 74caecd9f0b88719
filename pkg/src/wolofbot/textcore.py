"""Shared text layer: normalization, tokenization and vocabulary building.

Conventions are shared by the NLU featurizers and the WER scorer so that
both sides of the pipeline see identical token streams.  Wolof is written
in the official Latin orthography; diacritic letters are preserved and
USSD codes such as "#221*1*1#" stay atomic through every step.
"""

from __future__ import annotations

import re
import unicodedata
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

# Diacritic letters of the official Wolof alphabet (plus the few French
# accented letters that show up through code-switching). Never folded.
WOLOF_DIACRITICS = "àâéëñŋó"

# Sentence punctuation stripped by normalize(keep_punct=False). '#' and '*'
# are deliberately absent: USSD codes must survive normalization.
SENTENCE_PUNCT = ".,;:!?…"

OOV_TOKEN = "<oov>"

_USSD = r"#[0-9*]+#"
_PUNCT_CLASS = "[" + re.escape(SENTENCE_PUNCT) + "]"
_TOKEN_RE = re.compile(rf"{_USSD}|{_PUNCT_CLASS}|[^\s{re.escape(SENTENCE_PUNCT)}]+")
_PUNCT_RE = re.compile(_PUNCT_CLASS)


def normalize(raw: str, keep_punct: bool = False) -> str:
    """Canonicalize raw text: NFC, lowercase, collapsed whitespace.

    With keep_punct=False sentence punctuation is removed entirely;
    apostrophes, digits and USSD characters are always preserved.
    Idempotent: normalize(normalize(x)) == normalize(x).
    """
    text = unicodedata.normalize("NFC", raw)
    text = unicodedata.normalize("NFC", text.lower())
    if not keep_punct:
        text = _PUNCT_RE.sub(" ", text)
    return " ".join(text.split())


def tokenize(text: str) -> list[str]:
    """Split normalized text into tokens.

    Whitespace-separated; kept punctuation becomes standalone tokens;
    USSD codes remain single tokens. Empty input yields an empty list.
    """
    return _TOKEN_RE.findall(text)


def detokenize(tokens: Sequence[str]) -> str:
    return " ".join(tokens)


@dataclass(frozen=True)
class Vocab:
    """Bijective token<->index map with a reserved OOV slot."""

    tokens: tuple[str, ...]
    index_of: dict[str, int]
    oov_index: int

    def __len__(self) -> int:
        return len(self.tokens)

    def index(self, token: str) -> int:
        return self.index_of.get(token, self.oov_index)

    def known_tokens(self) -> tuple[str, ...]:
        """Tokens excluding the reserved OOV slot."""
        return tuple(t for i, t in enumerate(self.tokens) if i != self.oov_index)

    def __contains__(self, token: str) -> bool:
        return token in self.index_of


def build_vocab(corpus: Iterable[Sequence[str]], min_count: int = 1) -> Vocab:
    """Build a vocabulary over token sequences.

    Tokens with frequency >= min_count are indexed by descending frequency
    (ties broken lexicographically); the OOV slot is appended last. An
    empty corpus produces a vocabulary containing only OOV.
    """
    if min_count < 1:
        raise ValueError(f"min_count must be >= 1, got {min_count}")
    counts: Counter[str] = Counter()
    for tokens in corpus:
        counts.update(tokens)
    kept = sorted(
        (t for t, c in counts.items() if c >= min_count),
        key=lambda t: (-counts[t], t),
    )
    tokens = tuple(kept) + (OOV_TOKEN,)
    index_of = {t: i for i, t in enumerate(kept)}
    return Vocab(tokens=tokens, index_of=index_of, oov_index=len(kept))


def read_corpus(path: str | Path) -> list[str]:
    """Read a UTF-8 corpus file, one utterance per line; blank lines skipped."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [ln.strip() for ln in lines if ln.strip()]
