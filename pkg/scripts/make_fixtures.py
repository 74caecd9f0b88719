#!/usr/bin/env python3
"""Generate the committed test fixtures.

- tests/fixtures/lm_corpus_10k.txt: seeded pseudo-Wolof corpus (>= 10 000
  tokens) for language-model normalization and calibration tests.
- tests/fixtures/wolof_words_1000.txt: 1 000 distinct words covering the
  whole Wolof rule alphabet (all digraphs, geminates and prenasalized
  clusters appear) for the G2P totality test.

Both are deterministic: rerunning this script reproduces identical bytes.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

FIXTURES = Path(__file__).resolve().parents[1] / "tests" / "fixtures"

# Roughly Zipf-weighted homegrown vocabulary in the official orthography.
LM_VOCAB = (
    "ci la ma nga naa yi bi sama def am poñ sargal naka waaw dédét jërëjëf "
    "xool wone bëgg mën jëfandikoo weccee jënd dajale gagner yokk woote sms "
    "internet telefon orange jaam salaam beneen yoon kanam suba léegi lépp "
    "ñaata fan kenn nit téléconseiller jokkoo woo service client problème "
    "baax dëgg loolu doy bañ laaj yeneen tuuti bari gën crédit neexal tann "
    "prograamu fidélité bokk jariñ leeral xamal seet solde dem ñëw toog wax "
    "dégg xam mel ni rekk itam tamit walla ndax lu lan kan fu ban di dina "
    "dafa dañu ngeen ñoom moom yow man ku koo ko ay gi gii yii boobu dale "
    "jot may joxe indil yóbbu fekk gis ub tëj ubbi soppi dindi yokkute"
).split()

SYLLABLE_ONSETS = [
    "b", "c", "d", "f", "g", "j", "k", "l", "m", "n", "ñ", "ŋ", "p", "q",
    "r", "s", "t", "w", "x", "y", "mb", "nd", "nj", "ng", "bb", "cc", "dd",
    "gg", "jj", "kk", "ll", "mm", "nn", "ññ", "pp", "qq", "rr", "tt", "ww", "yy",
]
SYLLABLE_NUCLEI = [
    "a", "à", "â", "e", "é", "ë", "i", "o", "ó", "u",
    "aa", "àa", "ee", "ée", "éé", "ii", "oo", "óo", "óó", "uu",
]
SYLLABLE_CODAS = ["", "", "", "l", "m", "n", "ñ", "ŋ", "r", "s", "t", "k", "x", "w", "y", "q"]


def make_lm_corpus(path: Path, min_tokens: int = 10500) -> None:
    rng = np.random.default_rng(20220513)
    ranks = np.arange(1, len(LM_VOCAB) + 1)
    probs = (1.0 / ranks) / (1.0 / ranks).sum()
    lines = []
    total = 0
    while total < min_tokens:
        length = int(rng.integers(4, 13))
        words = [LM_VOCAB[i] for i in rng.choice(len(LM_VOCAB), size=length, p=probs)]
        lines.append(" ".join(words))
        total += length
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({total} tokens, {len(lines)} lines)")


def make_wordlist(path: Path, count: int = 1000) -> None:
    rng = np.random.default_rng(50271)
    words: list[str] = []
    seen: set[str] = set()
    # guarantee coverage: one word per onset and per nucleus
    for coverage in [onset + "a" for onset in SYLLABLE_ONSETS] + [
        "b" + nucleus for nucleus in SYLLABLE_NUCLEI
    ]:
        if coverage not in seen:
            seen.add(coverage)
            words.append(coverage)
    while len(words) < count:
        n_syllables = int(rng.integers(1, 4))
        parts = []
        for _ in range(n_syllables):
            onset = SYLLABLE_ONSETS[rng.integers(len(SYLLABLE_ONSETS))]
            nucleus = SYLLABLE_NUCLEI[rng.integers(len(SYLLABLE_NUCLEI))]
            coda = SYLLABLE_CODAS[rng.integers(len(SYLLABLE_CODAS))]
            parts.append(onset + nucleus + coda)
        word = "".join(parts)
        if word not in seen:
            seen.add(word)
            words.append(word)
    path.write_text("\n".join(words) + "\n", encoding="utf-8")
    print(f"wrote {path} ({len(words)} words)")


def make_tiny_lm(corpus_path: Path, lm_path: Path) -> None:
    from wolofbot.speech.lm import serialize_lm, train_lm
    from wolofbot.textcore import normalize, tokenize

    corpus_path.write_text("waaw dédét\nwaaw jaam\ndédét jaam waaw\n", encoding="utf-8")
    sentences = [tokenize(normalize(line)) for line in corpus_path.read_text().splitlines()]
    lm_path.write_text(serialize_lm(train_lm(sentences, order=2)), encoding="utf-8")
    print(f"wrote {corpus_path} and {lm_path}")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    make_lm_corpus(FIXTURES / "lm_corpus_10k.txt")
    make_wordlist(FIXTURES / "wolof_words_1000.txt")
    make_tiny_lm(FIXTURES / "tiny_corpus.txt", FIXTURES / "tiny_lm.txt")


if __name__ == "__main__":
    main()
