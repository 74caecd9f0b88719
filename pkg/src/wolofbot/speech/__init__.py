"""ASR-support kit: WER scoring, noise-channel simulation, n-gram language
modeling and grapheme-to-phoneme lexicon building."""

from wolofbot.speech.align import AlignOp, Alignment, WerScore, align, corpus_wer, wer
from wolofbot.speech.g2p import (
    G2PRule,
    LexiconEntry,
    Pronunciation,
    RuleTable,
    build_lexicon,
    french_rules,
    g2p,
    parse_lexicon,
    serialize_lexicon,
    wolof_rules,
)
from wolofbot.speech.lm import NGramLM, perplexity, read_lm, train_lm, write_lm
from wolofbot.speech.noise import NoiseConfig, corrupt

__all__ = [
    "AlignOp",
    "Alignment",
    "WerScore",
    "align",
    "corpus_wer",
    "wer",
    "NoiseConfig",
    "corrupt",
    "NGramLM",
    "train_lm",
    "perplexity",
    "read_lm",
    "write_lm",
    "G2PRule",
    "RuleTable",
    "Pronunciation",
    "LexiconEntry",
    "g2p",
    "wolof_rules",
    "french_rules",
    "build_lexicon",
    "serialize_lexicon",
    "parse_lexicon",
]
