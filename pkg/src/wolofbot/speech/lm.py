"""N-gram language model with interpolated Witten-Bell smoothing.

P(w | h) = (c(h,w) + T(h) * P(w | h')) / (c(h) + T(h))

where T(h) is the number of distinct continuations of context h and h' is
h with its oldest token dropped; the recursion bottoms out at a uniform
distribution over the prediction vocabulary (observed types + the OOV
symbol). This keeps every conditional a proper distribution: for any
context, probabilities over the full vocabulary sum to 1 and are > 0.

The on-disk format is a plain textual listing: a header, then per-order
sections of "log10prob<TAB>ngram" lines for every observed n-gram. The
loader reconstructs the backoff mass of each observed context from the
listed probabilities, so the file alone fully determines the model.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

BOS = "<s>"
EOS = "</s>"
UNK = "<unk>"

_RESERVED = {BOS, EOS, UNK}

_HEADER_PREFIX = "#wolofbot-ngram-lm"


@dataclass
class NGramLM:
    order: int
    counts: dict[int, Counter]  # k -> Counter of k-gram tuples
    context_totals: dict[tuple, int]  # h -> sum_w c(h, w)
    cont_types: dict[tuple, int]  # h -> T(h), distinct continuations
    vocab: frozenset[str]  # prediction space: observed types + EOS + UNK

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)

    def _map_word(self, word: str) -> str:
        return word if word in self.vocab else UNK

    def _map_context(self, context: Sequence[str]) -> tuple[str, ...]:
        mapped = tuple(t if (t == BOS or t in self.vocab) else UNK for t in context)
        return mapped[-(self.order - 1):] if self.order > 1 else ()

    def prob(self, word: str, context: Sequence[str] = ()) -> float:
        """Smoothed P(word | context); OOV words map to the OOV symbol."""
        return self._p(self._map_word(word), self._map_context(context))

    def _p(self, w: str, h: tuple[str, ...]) -> float:
        if not h:
            n = self.context_totals[()]
            t0 = self.cont_types[()]
            return (self.counts[1].get((w,), 0) + t0 / self.vocab_size) / (n + t0)
        c_h = self.context_totals.get(h, 0)
        t_h = self.cont_types.get(h, 0)
        lower = self._p(w, h[1:])
        if c_h + t_h == 0:
            return lower
        return (self.counts[len(h) + 1].get(h + (w,), 0) + t_h * lower) / (c_h + t_h)

    def sentence_logprob(self, tokens: Sequence[str]) -> float:
        """Natural-log probability of tokens followed by the end symbol."""
        context = (BOS,) * (self.order - 1)
        total = 0.0
        for word in list(tokens) + [EOS]:
            total += math.log(self.prob(word, context))
            if self.order > 1:
                context = context[1:] + (self._map_word(word),)
        return total


def train_lm(corpus: Iterable[Sequence[str]], order: int = 5) -> NGramLM:
    """Estimate a Witten-Bell smoothed model of the given order."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    sentences = [list(s) for s in corpus]
    if not sentences:
        raise ValueError("cannot train a language model on an empty corpus")
    for s in sentences:
        clash = _RESERVED.intersection(s)
        if clash:
            raise ValueError(f"corpus contains reserved symbols: {sorted(clash)}")

    counts: dict[int, Counter] = {k: Counter() for k in range(1, order + 1)}
    for s in sentences:
        for k in range(1, order + 1):
            seq = [BOS] * (k - 1) + s + [EOS]
            for i in range(len(seq) - k + 1):
                counts[k][tuple(seq[i : i + k])] += 1

    context_totals: dict[tuple, int] = {}
    cont_types: dict[tuple, int] = {}
    for k in range(1, order + 1):
        for ngram, c in counts[k].items():
            h = ngram[:-1]
            context_totals[h] = context_totals.get(h, 0) + c
            cont_types[h] = cont_types.get(h, 0) + 1

    vocab = frozenset(w for (w,) in counts[1]) | {EOS, UNK}
    return NGramLM(
        order=order,
        counts=counts,
        context_totals=context_totals,
        cont_types=cont_types,
        vocab=vocab,
    )


def perplexity(lm, corpus: Iterable[Sequence[str]]) -> float:
    """exp of the average negative log-likelihood per predicted token.

    Each sentence contributes len(tokens) + 1 predictions (the trailing
    end-of-sentence symbol counts). Works with any object exposing
    sentence_logprob(tokens).
    """
    sentences = [list(s) for s in corpus]
    if not sentences:
        raise ValueError("perplexity of an empty corpus is undefined")
    total_ll = 0.0
    total_tokens = 0
    for s in sentences:
        total_ll += lm.sentence_logprob(s)
        total_tokens += len(s) + 1
    return math.exp(-total_ll / total_tokens)


# ---------------------------------------------------------------------------
# Serialization: "log10prob<TAB>ngram" listing per order.


def serialize_lm(lm: NGramLM) -> str:
    lines = [f"{_HEADER_PREFIX} order={lm.order} vocab={lm.vocab_size}"]
    for k in range(1, lm.order + 1):
        lines.append(f"\\{k}-grams:")
        for ngram in sorted(lm.counts[k]):
            h, w = ngram[:-1], ngram[-1]
            logprob = math.log10(lm._p(w, h))
            lines.append(f"{logprob:.12f}\t{' '.join(ngram)}")
    lines.append("\\end\\")
    return "\n".join(lines) + "\n"


def write_lm(lm: NGramLM, path: str | Path) -> None:
    Path(path).write_text(serialize_lm(lm), encoding="utf-8")


@dataclass
class StoredNGramLM:
    """Model reloaded from the textual listing.

    Smoothed probabilities of observed n-grams are taken verbatim from the
    file; the backoff mass lambda(h) of each observed context is recovered
    from 1 - sum of its listed probabilities, so queries on unseen events
    reproduce the training-time distribution.
    """

    order: int
    vocab_size: int
    tables: dict[int, dict[tuple, float]]  # k -> {ngram: P(w|h)}
    continuations: dict[tuple, list[str]]  # h -> observed continuations
    vocab: frozenset[str]
    _lambda_cache: dict[tuple, float] = field(default_factory=dict)

    def _map_word(self, word: str) -> str:
        return word if word in self.vocab else UNK

    def _map_context(self, context: Sequence[str]) -> tuple[str, ...]:
        mapped = tuple(t if (t == BOS or t in self.vocab) else UNK for t in context)
        return mapped[-(self.order - 1):] if self.order > 1 else ()

    def prob(self, word: str, context: Sequence[str] = ()) -> float:
        return self._p(self._map_word(word), self._map_context(context))

    def _p(self, w: str, h: tuple[str, ...]) -> float:
        stored = self.tables[len(h) + 1].get(h + (w,))
        if stored is not None:
            return stored
        if not h:
            return self._lambda(()) / self.vocab_size
        if h in self.continuations:
            return self._lambda(h) * self._p(w, h[1:])
        return self._p(w, h[1:])

    def _lambda(self, h: tuple[str, ...]) -> float:
        lam = self._lambda_cache.get(h)
        if lam is not None:
            return lam
        table = self.tables[len(h) + 1]
        observed = self.continuations.get(h, [])
        seen_mass = sum(table[h + (w,)] for w in observed)
        if h:
            lower_mass = sum(self._p(w, h[1:]) for w in observed)
        else:
            lower_mass = len(observed) / self.vocab_size
        denom = 1.0 - lower_mass
        lam = max(0.0, (1.0 - seen_mass) / denom) if denom > 1e-12 else 0.0
        self._lambda_cache[h] = lam
        return lam

    def sentence_logprob(self, tokens: Sequence[str]) -> float:
        context = (BOS,) * (self.order - 1)
        total = 0.0
        for word in list(tokens) + [EOS]:
            total += math.log(self.prob(word, context))
            if self.order > 1:
                context = context[1:] + (self._map_word(word),)
        return total


def parse_lm(text: str) -> StoredNGramLM:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(_HEADER_PREFIX):
        raise ValueError("not a recognized LM file (missing header)")
    fields = dict(part.split("=") for part in lines[0].split()[1:])
    order = int(fields["order"])
    vocab_size = int(fields["vocab"])

    tables: dict[int, dict[tuple, float]] = {k: {} for k in range(1, order + 1)}
    continuations: dict[tuple, list[str]] = {}
    current_k = None
    for line in lines[1:]:
        if line == "\\end\\":
            break
        if line.startswith("\\") and line.endswith("-grams:"):
            current_k = int(line[1:].split("-")[0])
            continue
        if current_k is None:
            raise ValueError(f"n-gram line before any order header: {line!r}")
        logprob_s, ngram_s = line.split("\t")
        ngram = tuple(ngram_s.split(" "))
        if len(ngram) != current_k:
            raise ValueError(f"{current_k}-gram section contains {len(ngram)}-gram: {ngram_s!r}")
        tables[current_k][ngram] = 10.0 ** float(logprob_s)
        continuations.setdefault(ngram[:-1], []).append(ngram[-1])

    vocab = frozenset(w for (w,) in tables[1]) | {UNK}
    return StoredNGramLM(
        order=order,
        vocab_size=vocab_size,
        tables=tables,
        continuations=continuations,
        vocab=vocab,
    )


def read_lm(path: str | Path) -> StoredNGramLM:
    return parse_lm(Path(path).read_text(encoding="utf-8"))
