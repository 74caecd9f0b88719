"""Operator command line.

Subcommands: train-nlu, eval-nlu, wer, slu-degradation, train-lm,
perplexity, g2p, build-lexicon, serve. JSON results go to stdout, logs to
stderr. Exit codes: 0 success, 1 validation failure, 2 I/O failure.
Flag defaults can be overridden with WOLOFBOT_<FLAG> environment variables
(e.g. WOLOFBOT_SEED=7, WOLOFBOT_PORT=8080).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from wolofbot.nlu.data import IntentDataset, load_dataset
from wolofbot.nlu.metrics import cross_validate
from wolofbot.nlu.model import IntentModel, TrainConfig, load_model, save_model, train_intent_model
from wolofbot.speech.align import corpus_wer, wer
from wolofbot.speech.g2p import build_lexicon, french_rules, g2p, wolof_rules, write_lexicon
from wolofbot.speech.lm import perplexity, read_lm, train_lm, write_lm
from wolofbot.speech.noise import NoiseConfig, corrupt
from wolofbot.textcore import detokenize, normalize, read_corpus, tokenize

DEFAULT_LEVELS = (0.0, 0.1, 0.22, 0.4, 0.6)

ENV_PREFIX = "WOLOFBOT_"


class IOFailure(Exception):
    """Problems reading or writing artifact files (exit code 2)."""


def _env_default(name: str, default):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def packaged_dataset_path() -> str:
    return str(resources.files("wolofbot.data") / "sargal_nlu.json")


# ---------------------------------------------------------------------------
# SLU degradation experiment


@dataclass(frozen=True)
class DegradationRow:
    wer_level: float
    accuracy: float
    utterances: int


@dataclass(frozen=True)
class DegradationReport:
    rows: tuple[DegradationRow, ...]

    def __post_init__(self) -> None:
        levels = [r.wer_level for r in self.rows]
        if any(b <= a for a, b in zip(levels, levels[1:])):
            raise ValueError(f"WER levels must be strictly increasing, got {levels}")
        if any(not 0.0 <= r.accuracy <= 1.0 for r in self.rows):
            raise ValueError("accuracies must lie in [0, 1]")

    @property
    def baseline_accuracy(self) -> float:
        return self.rows[0].accuracy

    def to_dict(self) -> dict:
        accs = [r.accuracy for r in self.rows]
        return {
            "rows": [
                {"wer_level": r.wer_level, "accuracy": r.accuracy, "utterances": r.utterances}
                for r in self.rows
            ],
            "summary": {
                "baseline_accuracy": self.baseline_accuracy,
                "final_accuracy": accs[-1],
                "total_drop": self.baseline_accuracy - accs[-1],
                "max_increase_between_levels": max(
                    [b - a for a, b in zip(accs, accs[1:])], default=0.0
                ),
            },
        }


def run_slu_degradation(
    model: IntentModel,
    dataset: IntentDataset,
    levels: Sequence[float] = DEFAULT_LEVELS,
    seed: int = 0,
    replicates: int = 1,
) -> DegradationReport:
    """Intent accuracy under injected ASR noise, per WER level.

    Level 0.0 is always included as the clean baseline. Substitutions draw
    from the model's own vocabulary, the worst case for the classifier.
    """
    if len(dataset) == 0:
        raise ValueError("degradation experiment needs a non-empty eval set")
    levels = sorted(set(levels) | {0.0})
    vocab = model.featurizer.vocab
    rows = []
    for li, level in enumerate(levels):
        cfg = NoiseConfig(target_wer=level, seed=seed, vocab=vocab)
        correct = 0
        total = 0
        for rep in range(replicates):
            for ei, example in enumerate(dataset.examples):
                rng = np.random.default_rng(np.random.SeedSequence((seed, li, rep, ei)))
                tokens = tokenize(normalize(example.text))
                noisy = detokenize(corrupt(tokens, cfg, rng=rng))
                if model.predict(noisy).intent == example.intent:
                    correct += 1
                total += 1
        rows.append(DegradationRow(wer_level=level, accuracy=correct / total, utterances=total))
    return DegradationReport(rows=tuple(rows))


# ---------------------------------------------------------------------------
# command implementations


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IOFailure(f"cannot read {path}: {exc}") from exc


def _load_json(path: str) -> dict:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise IOFailure(f"{path} is not valid JSON: {exc}") from exc


def _load_dataset(path: str) -> IntentDataset:
    from wolofbot.nlu.data import dataset_from_dict

    return dataset_from_dict(_load_json(path))


def cmd_train_nlu(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.data)
    config = TrainConfig.from_dict(_load_json(args.config)) if args.config else TrainConfig(seed=args.seed)
    model = train_intent_model(dataset, config)
    try:
        save_model(model, args.out)
    except OSError as exc:
        raise IOFailure(f"cannot write model to {args.out}: {exc}") from exc
    print(json.dumps({"model": args.out, "labels": list(model.labels), "examples": len(dataset)}))
    return 0


def cmd_eval_nlu(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.data)
    report = cross_validate(dataset, k=args.k, seed=args.seed)
    print(report.to_json())
    return 0


def _read_token_lines(path: str) -> list[list[str]]:
    return [tokenize(normalize(line)) for line in _read_text(path).splitlines()]


def cmd_wer(args: argparse.Namespace) -> int:
    refs = _read_token_lines(args.ref)
    hyps = _read_token_lines(args.hyp)
    if len(refs) != len(hyps):
        raise IOFailure(f"line count mismatch: {args.ref} has {len(refs)}, {args.hyp} has {len(hyps)}")
    pairs = list(zip(refs, hyps))
    total = corpus_wer(pairs)
    per_line = [wer(r, h).to_dict() for r, h in pairs]
    print(json.dumps({"corpus": total.to_dict(), "per_line": per_line}, ensure_ascii=False, indent=2))
    return 0


def cmd_slu_degradation(args: argparse.Namespace) -> int:
    model = _load_model(args.model)
    dataset = _load_dataset(args.data)
    levels = [float(x) for x in args.levels.split(",")] if args.levels else list(DEFAULT_LEVELS)
    report = run_slu_degradation(model, dataset, levels=levels, seed=args.seed, replicates=args.replicates)
    print(json.dumps(report.to_dict(), indent=2))
    return 0


def _load_model(path: str) -> IntentModel:
    try:
        return load_model(path)
    except OSError as exc:
        raise IOFailure(f"cannot read model {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise IOFailure(f"model file {path} is not valid JSON: {exc}") from exc


def cmd_train_lm(args: argparse.Namespace) -> int:
    corpus = [tokenize(normalize(line)) for line in _read_corpus(args.data)]
    lm = train_lm(corpus, order=args.order)
    try:
        write_lm(lm, args.out)
    except OSError as exc:
        raise IOFailure(f"cannot write LM to {args.out}: {exc}") from exc
    print(json.dumps({"lm": args.out, "order": lm.order, "vocab": lm.vocab_size}))
    return 0


def _read_corpus(path: str) -> list[str]:
    try:
        return read_corpus(path)
    except OSError as exc:
        raise IOFailure(f"cannot read corpus {path}: {exc}") from exc


def cmd_perplexity(args: argparse.Namespace) -> int:
    try:
        lm = read_lm(args.lm)
    except OSError as exc:
        raise IOFailure(f"cannot read LM {args.lm}: {exc}") from exc
    corpus = [tokenize(normalize(line)) for line in _read_corpus(args.data)]
    ppl = perplexity(lm, corpus)
    print(json.dumps({"perplexity": ppl, "sentences": len(corpus), "order": lm.order}))
    return 0


def cmd_g2p(args: argparse.Namespace) -> int:
    table = wolof_rules() if args.table == "wolof" else french_rules()
    word = normalize(args.word)
    print(" ".join(g2p(word, table)))
    return 0


def cmd_build_lexicon(args: argparse.Namespace) -> int:
    words = []
    for lineno, line in enumerate(_read_text(args.words).splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) == 1:
            words.append((normalize(parts[0]), "wolof"))
        elif len(parts) == 2:
            words.append((normalize(parts[0]), parts[1].strip()))
        else:
            raise IOFailure(f"{args.words}:{lineno}: expected 'word' or 'word<TAB>tag'")
    entries = build_lexicon(words)
    try:
        write_lexicon(entries, args.out)
    except OSError as exc:
        raise IOFailure(f"cannot write lexicon to {args.out}: {exc}") from exc
    print(json.dumps({"lexicon": args.out, "entries": len(entries)}))
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from wolofbot.gateway.service import GatewayConfig, create_app

    config = GatewayConfig(
        nlu_model_path=args.model,
        domain_path=args.domain,
        audio_dir=args.audio_dir,
        log_path=args.log,
        adapter=args.adapter,
        simulated_wer=args.wer,
        noise_seed=args.seed,
        session_ttl=args.ttl,
    )
    app = create_app(config)
    print(f"serving on 0.0.0.0:{args.port} (adapter={args.adapter})", file=sys.stderr)
    uvicorn.run(app, host="0.0.0.0", port=args.port, log_level="warning")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wolofbot", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train-nlu", help="train the intent model")
    p.add_argument("--data", default=_env_default("data", packaged_dataset_path()))
    p.add_argument("--config", default=_env_default("config", None))
    p.add_argument("--out", default=_env_default("out", "nlu_model.json"))
    p.add_argument("--seed", type=int, default=int(_env_default("seed", 13)))
    p.set_defaults(func=cmd_train_nlu)

    p = sub.add_parser("eval-nlu", help="stratified k-fold cross-validation")
    p.add_argument("--data", default=_env_default("data", packaged_dataset_path()))
    p.add_argument("--k", type=int, default=int(_env_default("k", 5)))
    p.add_argument("--seed", type=int, default=int(_env_default("seed", 0)))
    p.set_defaults(func=cmd_eval_nlu)

    p = sub.add_parser("wer", help="corpus WER between line-aligned ref/hyp files")
    p.add_argument("--ref", required=True)
    p.add_argument("--hyp", required=True)
    p.set_defaults(func=cmd_wer)

    p = sub.add_parser("slu-degradation", help="intent accuracy under injected ASR noise")
    p.add_argument("--model", required=True)
    p.add_argument("--data", default=_env_default("data", packaged_dataset_path()))
    p.add_argument("--levels", default=_env_default("levels", None), help="comma-separated WER levels")
    p.add_argument("--seed", type=int, default=int(_env_default("seed", 0)))
    p.add_argument("--replicates", type=int, default=int(_env_default("replicates", 1)))
    p.set_defaults(func=cmd_slu_degradation)

    p = sub.add_parser("train-lm", help="train the n-gram language model")
    p.add_argument("--data", required=True, help="corpus file, one utterance per line")
    p.add_argument("--order", type=int, default=int(_env_default("order", 5)))
    p.add_argument("--out", default=_env_default("out", "wolof_lm.txt"))
    p.set_defaults(func=cmd_train_lm)

    p = sub.add_parser("perplexity", help="perplexity of a corpus under a trained LM")
    p.add_argument("--lm", required=True)
    p.add_argument("--data", required=True)
    p.set_defaults(func=cmd_perplexity)

    p = sub.add_parser("g2p", help="grapheme-to-phoneme conversion of one word")
    p.add_argument("word")
    p.add_argument("--table", choices=("wolof", "french"), default="wolof")
    p.set_defaults(func=cmd_g2p)

    p = sub.add_parser("build-lexicon", help="build a pronunciation lexicon from a word list")
    p.add_argument("--words", required=True, help="one word per line, optional <TAB>tag")
    p.add_argument("--out", default=_env_default("out", "lexicon.tsv"))
    p.set_defaults(func=cmd_build_lexicon)

    p = sub.add_parser("serve", help="run the webhook gateway")
    p.add_argument("--model", required=True)
    p.add_argument("--domain", default=_env_default("domain", None))
    p.add_argument("--audio-dir", default=_env_default("audio_dir", None))
    p.add_argument("--port", type=int, default=int(_env_default("port", 8000)))
    p.add_argument("--adapter", choices=("identity", "simulated"), default=_env_default("adapter", "identity"))
    p.add_argument("--wer", type=float, default=float(_env_default("wer", 0.22)))
    p.add_argument("--seed", type=int, default=int(_env_default("seed", 0)))
    p.add_argument("--log", default=_env_default("log", "conversations.jsonl"))
    p.add_argument("--ttl", type=float, default=float(_env_default("ttl", 1800.0)))
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
