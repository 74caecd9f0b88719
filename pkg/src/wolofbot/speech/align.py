"""Token-level Levenshtein alignment and word error rate.

WER = (S + D + I) / N_ref with unit edit costs. The backtrace is made
deterministic by preferring MATCH > SUB > DEL > INS whenever costs tie,
so alignments are stable across runs and usable in snapshot tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence


class OpKind(str, Enum):
    MATCH = "match"
    SUB = "sub"
    DEL = "del"
    INS = "ins"


@dataclass(frozen=True)
class AlignOp:
    kind: OpKind
    ref: Optional[str]  # None for insertions
    hyp: Optional[str]  # None for deletions


@dataclass(frozen=True)
class Alignment:
    ops: tuple[AlignOp, ...]

    @property
    def matches(self) -> int:
        return sum(1 for op in self.ops if op.kind is OpKind.MATCH)

    @property
    def substitutions(self) -> int:
        return sum(1 for op in self.ops if op.kind is OpKind.SUB)

    @property
    def deletions(self) -> int:
        return sum(1 for op in self.ops if op.kind is OpKind.DEL)

    @property
    def insertions(self) -> int:
        return sum(1 for op in self.ops if op.kind is OpKind.INS)

    @property
    def distance(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    def replay(self) -> tuple[list[str], list[str]]:
        """Reconstruct (ref, hyp) from the op sequence."""
        ref = [op.ref for op in self.ops if op.ref is not None]
        hyp = [op.hyp for op in self.ops if op.hyp is not None]
        return ref, hyp


@dataclass(frozen=True)
class WerScore:
    substitutions: int
    deletions: int
    insertions: int
    ref_length: int

    @property
    def errors(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    @property
    def wer(self) -> float:
        return self.errors / self.ref_length

    def to_dict(self) -> dict:
        return {
            "substitutions": self.substitutions,
            "deletions": self.deletions,
            "insertions": self.insertions,
            "ref_length": self.ref_length,
            "wer": self.wer,
        }


def align(ref: Sequence[str], hyp: Sequence[str]) -> Alignment:
    """Minimal unit-cost edit script turning ref into hyp."""
    m, n = len(ref), len(hyp)
    # dist[i][j] = edit distance between ref[:i] and hyp[:j]
    dist = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        dist[i][0] = i
    for j in range(1, n + 1):
        dist[0][j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            sub_cost = 0 if ref[i - 1] == hyp[j - 1] else 1
            dist[i][j] = min(
                dist[i - 1][j - 1] + sub_cost,
                dist[i - 1][j] + 1,
                dist[i][j - 1] + 1,
            )

    ops: list[AlignOp] = []
    i, j = m, n
    while i > 0 or j > 0:
        if i > 0 and j > 0 and ref[i - 1] == hyp[j - 1] and dist[i][j] == dist[i - 1][j - 1]:
            ops.append(AlignOp(OpKind.MATCH, ref[i - 1], hyp[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and j > 0 and dist[i][j] == dist[i - 1][j - 1] + 1:
            ops.append(AlignOp(OpKind.SUB, ref[i - 1], hyp[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and dist[i][j] == dist[i - 1][j] + 1:
            ops.append(AlignOp(OpKind.DEL, ref[i - 1], None))
            i -= 1
        else:
            ops.append(AlignOp(OpKind.INS, None, hyp[j - 1]))
            j -= 1
    ops.reverse()
    return Alignment(ops=tuple(ops))


def wer(ref: Sequence[str], hyp: Sequence[str]) -> WerScore:
    """Word error rate of a single utterance pair. May exceed 1.0."""
    if len(ref) == 0:
        raise ValueError("WER is undefined for an empty reference")
    a = align(ref, hyp)
    return WerScore(
        substitutions=a.substitutions,
        deletions=a.deletions,
        insertions=a.insertions,
        ref_length=len(ref),
    )


def corpus_wer(pairs: Sequence[tuple[Sequence[str], Sequence[str]]]) -> WerScore:
    """Micro-averaged corpus WER: total errors over total reference length."""
    if not pairs:
        raise ValueError("corpus_wer needs at least one (ref, hyp) pair")
    s = d = ins = n = 0
    for ref, hyp in pairs:
        score = wer(ref, hyp)
        s += score.substitutions
        d += score.deletions
        ins += score.insertions
        n += score.ref_length
    return WerScore(substitutions=s, deletions=d, insertions=ins, ref_length=n)
