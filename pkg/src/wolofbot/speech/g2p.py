"""Rule-based grapheme-to-phoneme conversion and lexicon building.

Words are converted by greedy longest-match over an ordered rule table:
digraphs, geminates and prenasalized clusters are matched before single
letters, so "aa" becomes one long vowel and "ng" the velar nasal cluster.
Output symbols come from a versioned SAMPA inventory shipped with the
package. Characters outside a table's alphabet pass through unchanged and
are flagged, never silently dropped.

The Wolof table covers the official Latin orthography; a reduced French
table (mapped into the same inventory) handles code-switched loanwords.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence


@dataclass(frozen=True)
class G2PRule:
    grapheme: str
    phones: tuple[str, ...]


@dataclass(frozen=True)
class Pronunciation:
    word: str
    symbols: tuple[str, ...]
    unknown: tuple[str, ...]  # characters passed through with a warning


def sampa_inventory() -> frozenset[str]:
    data = json.loads(
        resources.files("wolofbot.data").joinpath("sampa_inventory.json").read_text("utf-8")
    )
    return frozenset(data["symbols"])


class RuleTable:
    """Ordered G2P rules applied longest-match first, declaration order second."""

    def __init__(self, name: str, rules: Sequence[G2PRule]):
        self.name = name
        self.rules = tuple(rules)
        inventory = sampa_inventory()
        seen: dict[str, G2PRule] = {}
        for rule in self.rules:
            if not rule.grapheme:
                raise ValueError("empty grapheme pattern")
            if rule.grapheme in seen:
                raise ValueError(f"duplicate rule for grapheme {rule.grapheme!r}")
            bad = [p for p in rule.phones if p not in inventory]
            if bad:
                raise ValueError(f"rule {rule.grapheme!r} emits symbols outside the inventory: {bad}")
            seen[rule.grapheme] = rule
        # longest pattern wins; among equal lengths, declaration order
        self._ordered = sorted(
            range(len(self.rules)), key=lambda i: (-len(self.rules[i].grapheme), i)
        )
        self.alphabet = frozenset(ch for r in self.rules for ch in r.grapheme)

    def convert(self, word: str) -> Pronunciation:
        symbols: list[str] = []
        unknown: list[str] = []
        i = 0
        n = len(word)
        while i < n:
            matched = None
            for idx in self._ordered:
                rule = self.rules[idx]
                if word.startswith(rule.grapheme, i):
                    matched = rule
                    break
            if matched is None:
                symbols.append(word[i])
                unknown.append(word[i])
                i += 1
            else:
                symbols.extend(matched.phones)
                i += len(matched.grapheme)
        return Pronunciation(word=word, symbols=tuple(symbols), unknown=tuple(unknown))


def g2p(word: str, table: RuleTable) -> list[str]:
    """SAMPA symbols for a normalized (lowercase NFC) word."""
    if not word:
        raise ValueError("cannot convert an empty word")
    return list(table.convert(word).symbols)


_DIGIT_RULES = [G2PRule(str(d), (f"d{d}",)) for d in range(10)]

_WOLOF_RULES = [
    # long vowels (doubled letters)
    G2PRule("aa", ("a:",)),
    G2PRule("àa", ("a:",)),
    G2PRule("ee", ("E:",)),
    G2PRule("ée", ("e:",)),
    G2PRule("éé", ("e:",)),
    G2PRule("ii", ("i:",)),
    G2PRule("oo", ("O:",)),
    G2PRule("óo", ("o:",)),
    G2PRule("óó", ("o:",)),
    G2PRule("uu", ("u:",)),
    # prenasalized clusters
    G2PRule("mb", ("m", "b")),
    G2PRule("nd", ("n", "d")),
    G2PRule("nj", ("J", "dZ")),
    G2PRule("ng", ("N", "g")),
    # geminate consonants
    G2PRule("bb", ("b:",)),
    G2PRule("cc", ("tS:",)),
    G2PRule("dd", ("d:",)),
    G2PRule("gg", ("g:",)),
    G2PRule("jj", ("dZ:",)),
    G2PRule("kk", ("k:",)),
    G2PRule("ll", ("l:",)),
    G2PRule("mm", ("m:",)),
    G2PRule("nn", ("n:",)),
    G2PRule("ññ", ("J:",)),
    G2PRule("pp", ("p:",)),
    G2PRule("qq", ("q:",)),
    G2PRule("rr", ("r:",)),
    G2PRule("tt", ("t:",)),
    G2PRule("ww", ("w:",)),
    G2PRule("yy", ("j:",)),
    # single letters
    G2PRule("a", ("a",)),
    G2PRule("à", ("a:",)),
    G2PRule("â", ("a:",)),
    G2PRule("b", ("b",)),
    G2PRule("c", ("tS",)),
    G2PRule("d", ("d",)),
    G2PRule("e", ("E",)),
    G2PRule("é", ("e",)),
    G2PRule("ë", ("@",)),
    G2PRule("f", ("f",)),
    G2PRule("g", ("g",)),
    G2PRule("h", ("h",)),
    G2PRule("i", ("i",)),
    G2PRule("j", ("dZ",)),
    G2PRule("k", ("k",)),
    G2PRule("l", ("l",)),
    G2PRule("m", ("m",)),
    G2PRule("n", ("n",)),
    G2PRule("ñ", ("J",)),
    G2PRule("ŋ", ("N",)),
    G2PRule("o", ("O",)),
    G2PRule("ó", ("o",)),
    G2PRule("p", ("p",)),
    G2PRule("q", ("q",)),
    G2PRule("r", ("r",)),
    G2PRule("s", ("s",)),
    G2PRule("t", ("t",)),
    G2PRule("u", ("u",)),
    G2PRule("w", ("w",)),
    G2PRule("x", ("x",)),
    G2PRule("y", ("j",)),
    G2PRule("-", ()),
    G2PRule("'", ()),
] + _DIGIT_RULES

_FRENCH_RULES = [
    # common multi-letter patterns, reduced set (no positional conditioning)
    G2PRule("eaux", ("o",)),
    G2PRule("eau", ("o",)),
    G2PRule("aux", ("o",)),
    G2PRule("au", ("o",)),
    G2PRule("ai", ("E",)),
    G2PRule("ei", ("E",)),
    G2PRule("ou", ("u",)),
    G2PRule("oi", ("w", "a")),
    G2PRule("ch", ("S",)),
    G2PRule("gn", ("J",)),
    G2PRule("ph", ("f",)),
    G2PRule("qu", ("k",)),
    G2PRule("th", ("t",)),
    G2PRule("bb", ("b",)),
    G2PRule("cc", ("k",)),
    G2PRule("dd", ("d",)),
    G2PRule("ff", ("f",)),
    G2PRule("ll", ("l",)),
    G2PRule("mm", ("m",)),
    G2PRule("nn", ("n",)),
    G2PRule("pp", ("p",)),
    G2PRule("rr", ("r",)),
    G2PRule("ss", ("s",)),
    G2PRule("tt", ("t",)),
    G2PRule("a", ("a",)),
    G2PRule("à", ("a",)),
    G2PRule("â", ("a",)),
    G2PRule("b", ("b",)),
    G2PRule("c", ("k",)),
    G2PRule("ç", ("s",)),
    G2PRule("d", ("d",)),
    G2PRule("e", ("@",)),
    G2PRule("é", ("e",)),
    G2PRule("è", ("E",)),
    G2PRule("ê", ("E",)),
    G2PRule("ë", ("E",)),
    G2PRule("f", ("f",)),
    G2PRule("g", ("g",)),
    G2PRule("h", ()),
    G2PRule("i", ("i",)),
    G2PRule("î", ("i",)),
    G2PRule("ï", ("i",)),
    G2PRule("j", ("Z",)),
    G2PRule("k", ("k",)),
    G2PRule("l", ("l",)),
    G2PRule("m", ("m",)),
    G2PRule("n", ("n",)),
    G2PRule("o", ("o",)),
    G2PRule("ô", ("o",)),
    G2PRule("œ", ("2",)),
    G2PRule("p", ("p",)),
    G2PRule("q", ("k",)),
    G2PRule("r", ("r",)),
    G2PRule("s", ("s",)),
    G2PRule("t", ("t",)),
    G2PRule("u", ("y",)),
    G2PRule("ù", ("y",)),
    G2PRule("û", ("y",)),
    G2PRule("v", ("v",)),
    G2PRule("w", ("w",)),
    G2PRule("x", ("ks",)),
    G2PRule("y", ("i",)),
    G2PRule("z", ("z",)),
    G2PRule("-", ()),
    G2PRule("'", ()),
] + _DIGIT_RULES


@lru_cache(maxsize=None)
def wolof_rules() -> RuleTable:
    return RuleTable("wolof", _WOLOF_RULES)


@lru_cache(maxsize=None)
def french_rules() -> RuleTable:
    return RuleTable("french", _FRENCH_RULES)


_TABLES = {"wolof": wolof_rules, "french": french_rules}


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    pron: tuple[str, ...]
    source: str = "wolof"


def build_lexicon(words: Iterable[tuple[str, str]]) -> list[LexiconEntry]:
    """Convert (word, source-tag) pairs into lexicon entries sorted by word.

    Tags select the rule table ("wolof" or "french"). Duplicate words are
    rejected with the full duplicate list in the error message.
    """
    items = list(words)
    seen: dict[str, int] = {}
    for word, _ in items:
        seen[word] = seen.get(word, 0) + 1
    dupes = sorted(w for w, c in seen.items() if c > 1)
    if dupes:
        raise ValueError(f"duplicate words in lexicon input: {dupes}")

    entries = []
    for word, tag in sorted(items):
        if tag not in _TABLES:
            raise ValueError(f"unknown source tag {tag!r} for word {word!r}")
        pron = tuple(g2p(word, _TABLES[tag]()))
        if not pron:
            raise ValueError(f"word {word!r} produced an empty pronunciation")
        entries.append(LexiconEntry(word=word, pron=pron, source=tag))
    return entries


def serialize_lexicon(entries: Sequence[LexiconEntry]) -> str:
    """One entry per line: word<TAB>phones, plus a tag field for non-Wolof rows."""
    lines = []
    for e in entries:
        line = f"{e.word}\t{' '.join(e.pron)}"
        if e.source != "wolof":
            line += f"\t{e.source}"
        lines.append(line)
    return "\n".join(lines) + ("\n" if lines else "")


def parse_lexicon(text: str) -> list[LexiconEntry]:
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) not in (2, 3):
            raise ValueError(f"lexicon line {lineno} malformed: {line!r}")
        word, phones = parts[0], tuple(parts[1].split(" "))
        source = parts[2] if len(parts) == 3 else "wolof"
        entries.append(LexiconEntry(word=word, pron=phones, source=source))
    return entries


def write_lexicon(entries: Sequence[LexiconEntry], path: str | Path) -> None:
    Path(path).write_text(serialize_lexicon(entries), encoding="utf-8")


def read_lexicon(path: str | Path) -> list[LexiconEntry]:
    return parse_lexicon(Path(path).read_text(encoding="utf-8"))
