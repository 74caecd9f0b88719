#!/usr/bin/env python3
"""Run the two evaluation experiments on the bundled synthetic dataset and
print a compact summary: 5-fold cross-validation of the intent model, and
intent accuracy under increasing injected ASR noise.

Usage: python scripts/run_experiments.py [--seed N] [--replicates N]
"""

from __future__ import annotations

import argparse
import sys
import time

from wolofbot.cli import DEFAULT_LEVELS, packaged_dataset_path, run_slu_degradation
from wolofbot.nlu import cross_validate, load_dataset, train_intent_model


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--replicates", type=int, default=5)
    args = parser.parse_args()

    dataset = load_dataset(packaged_dataset_path())
    counts = dataset.counts_by_label()
    print(f"dataset: {len(dataset)} utterances, {len(counts)} intents")

    started = time.time()
    report = cross_validate(dataset, k=5, seed=args.seed)
    print(f"\n5-fold cross-validation ({time.time() - started:.1f}s):")
    print(f"  weighted precision {report.weighted_precision:.3f}")
    print(f"  weighted recall    {report.weighted_recall:.3f}")
    print(f"  weighted F1        {report.weighted_f1:.3f}")
    for label in report.labels:
        m = report.per_label[label]
        print(f"    {label:<16} P {m.precision:.2f}  R {m.recall:.2f}  F1 {m.f1:.2f}  n={m.support}")

    model = train_intent_model(dataset)
    started = time.time()
    degradation = run_slu_degradation(
        model, dataset, levels=DEFAULT_LEVELS, seed=args.seed, replicates=args.replicates
    )
    print(f"\nintent accuracy under injected ASR noise ({time.time() - started:.1f}s):")
    for row in degradation.rows:
        bar = "#" * round(row.accuracy * 40)
        print(f"  WER {row.wer_level:4.2f}: {row.accuracy:6.3f} {bar}")
    summary = degradation.to_dict()["summary"]
    print(f"  total drop: {summary['total_drop']:.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
