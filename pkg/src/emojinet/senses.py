"""Crowd sense-label filtering.

A raw label ``word(pos)`` survives when the word is one of the emoji's seed
keywords, or when more than one person submitted it. Either way the lexicon
must list the word under that part of speech.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .inventory import EmojiEntry
from .ingest import Lexicon, RawLabel, normalize_word

NOT_SEED_NOT_AGREED = "not-seed-not-agreed"
INVALID_POS = "invalid-pos"

AGREEMENT_THRESHOLD = 2


@dataclass(frozen=True, order=True)
class SenseLabel:
    word: str
    pos: str
    submission_count: int
    origin: str


@dataclass(frozen=True)
class Rejection:
    word: str
    pos: str
    submission_count: int
    reason: str

    def to_record(self, unicode: str) -> dict:
        return {
            "unicode": unicode,
            "word": self.word,
            "pos": self.pos,
            "submission_count": self.submission_count,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class FilterResult:
    kept: frozenset[SenseLabel]
    rejected: tuple[Rejection, ...]


def seed_keywords(entry: EmojiEntry) -> frozenset[str]:
    return frozenset(normalize_word(k) for k in entry.keywords if normalize_word(k))


def _as_raw(label) -> RawLabel:
    if isinstance(label, RawLabel):
        return label
    word, pos, count = label
    return RawLabel(word, pos, count)


def filter_labels(raw_labels: Iterable, seeds: Iterable[str], lexicon: Lexicon) -> FilterResult:
    """Split ``raw_labels`` into kept :class:`SenseLabel` values and rejections.

    ``raw_labels`` holds :class:`RawLabel` values or ``(word, pos, count)``
    triples. Repeated ``(word, pos)`` pairs are folded by summing counts.
    """
    seeds = {normalize_word(s) for s in seeds}
    counts: dict[tuple[str, str], int] = {}
    for label in map(_as_raw, raw_labels):
        key = (normalize_word(label.word), label.pos)
        counts[key] = counts.get(key, 0) + label.submission_count

    kept, rejected = set(), []
    for (word, pos), count in sorted(counts.items()):
        if word in seeds:
            origin = "seed"
        elif count >= AGREEMENT_THRESHOLD:
            origin = "agreed"
        else:
            rejected.append(Rejection(word, pos, count, NOT_SEED_NOT_AGREED))
            continue
        if not lexicon.has(word, pos):
            rejected.append(Rejection(word, pos, count, INVALID_POS))
            continue
        kept.add(SenseLabel(word, pos, count, origin))
    return FilterResult(frozenset(kept), tuple(rejected))
