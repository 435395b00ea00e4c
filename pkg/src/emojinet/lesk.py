"""Emoji extraction from raw text and Simplified-Lesk sense ranking.

The sense of an emoji occurrence is chosen by counting the distinct words
shared by the message and the glosses of each candidate sense.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import regex

from .errors import NoSensesError
from .ingest import Lexicon
from .inventory import EmojiEntry, SenseAssignment, canonicalize_codepoint, codepoints
from .stopwords import ENGLISH_STOPWORDS

VARIATION_SELECTOR = 0xFE0F
SKIN_TONES = range(0x1F3FB, 0x1F400)

_WORD_RE = re.compile(r"[^\W_]+")
_APOSTROPHES = str.maketrans("", "", "'’")
_EMOJI_CLUSTER = regex.compile(r"\p{Emoji_Presentation}|\p{Regional_Indicator}|\uFE0F|\u20E3")
_GRAPHEME = regex.compile(r"\X")


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens; apostrophes are dropped, other punctuation splits."""
    return _WORD_RE.findall(text.lower().translate(_APOSTROPHES))


def content_words(text: str, stopwords=ENGLISH_STOPWORDS) -> set[str]:
    return {w for w in tokenize(text) if w not in stopwords}


@dataclass(frozen=True)
class EmojiOccurrence:
    unicode: str
    byte_offset: int
    surrounding_text: str
    matched_text: str = ""
    unknown: bool = False

    def to_record(self) -> dict:
        return {
            "unicode": self.unicode,
            "byte_offset": self.byte_offset,
            "matched_text": self.matched_text,
            "unknown": self.unknown,
        }


class EmojiMatcher:
    """Longest-match-first scanner over the codepoint sequences of an inventory."""

    _END = object()

    def __init__(self, codes: Iterable[str]):
        self.trie: dict = {}
        for code in codes:
            node = self.trie
            for cp in codepoints(code):
                node = node.setdefault(cp, {})
            node[self._END] = code

    @classmethod
    def from_inventory(cls, inventory) -> EmojiMatcher:
        if isinstance(inventory, EmojiMatcher):
            return inventory
        if isinstance(inventory, Mapping):
            return cls(inventory.keys())
        return cls(e.unicode if isinstance(e, EmojiEntry) else e for e in inventory)

    def _walk(self, text: str, i: int, node: dict, skips: int):
        """Best (end, -skips, code) reachable from ``node`` at text index ``i``."""
        best = None
        if self._END in node:
            best = (i, -skips, node[self._END])
        if i >= len(text):
            return best
        cp = ord(text[i])
        options = []
        if cp in node:
            options.append(self._walk(text, i + 1, node[cp], skips))
        # selectors and modifiers are transparent only after the first codepoint
        if node is not self.trie:
            if cp == VARIATION_SELECTOR:
                options.append(self._walk(text, i + 1, node, skips))
            elif cp in SKIN_TONES:
                options.append(self._walk(text, i + 1, node, skips + 1))
        for opt in options:
            if opt is not None and (best is None or opt[:2] > best[:2]):
                best = opt
        return best

    def match_at(self, text: str, i: int) -> tuple[int, str] | None:
        found = self._walk(text, i, self.trie, 0)
        if found is None or found[0] == i:
            return None
        return found[0], found[2]


def _window_text(text: str, start: int, end: int, window: int | None) -> str:
    if window is None:
        return text
    spans = [(m.start(), m.end()) for m in _WORD_RE.finditer(text)]
    before = [text[a:b] for a, b in spans if b <= start][-window:] if window else []
    after = [text[a:b] for a, b in spans if a >= end][:window]
    return " ".join(before + after)


def extract_emoji(text: str, inventory, window: int | None = None) -> list[EmojiOccurrence]:
    """Find emoji in ``text``; ``inventory`` is entries, codepoints, a mapping or a matcher.

    Sequences missing from the inventory are still reported, with
    ``unknown=True``. ``window`` limits the surrounding text to that many word
    tokens on each side of the emoji.
    """
    matcher = EmojiMatcher.from_inventory(inventory)
    out = []
    i, offset = 0, 0
    n = len(text)
    while i < n:
        hit = matcher.match_at(text, i)
        if hit is not None:
            end, code = hit
            unknown = False
        else:
            cluster = _GRAPHEME.match(text, i)
            end = cluster.end()
            if not _EMOJI_CLUSTER.search(cluster.group()):
                offset += len(text[i:end].encode("utf-8"))
                i = end
                continue
            try:
                code = canonicalize_codepoint(cluster.group())
            except ValueError:
                offset += len(text[i:end].encode("utf-8"))
                i = end
                continue
            unknown = True
        piece = text[i:end]
        out.append(
            EmojiOccurrence(
                unicode=code,
                byte_offset=offset,
                surrounding_text=_window_text(text, i, end, window),
                matched_text=piece,
                unknown=unknown,
            )
        )
        offset += len(piece.encode("utf-8"))
        i = end
    return out


def gloss_words(sense: SenseAssignment, lexicon: Lexicon, include_examples: bool = True) -> set[str]:
    """Content words of every gloss (and example) of the sense in the lexicon."""
    lex_sense = lexicon.sense(sense.word, sense.pos, sense.sense_id)
    texts = list(lex_sense.glosses)
    if include_examples:
        texts += lex_sense.examples
    words: set[str] = set()
    for t in texts:
        words |= content_words(t)
    return words


@dataclass(frozen=True)
class SenseScore:
    sense: SenseAssignment
    overlap: int
    overlapping_words: frozenset[str]

    def to_record(self) -> dict:
        return {
            "word": self.sense.word,
            "pos": self.sense.pos,
            "sense_id": self.sense.sense_id,
            "gloss": self.sense.gloss,
            "provenance": self.sense.provenance,
            "overlap": self.overlap,
            "overlapping_words": sorted(self.overlapping_words),
        }


@dataclass(frozen=True)
class LeskResult:
    unicode: str
    scores: tuple[SenseScore, ...]
    undecided: bool

    @property
    def winner(self) -> SenseScore:
        return self.scores[0]


_PROVENANCE_RANK = {"MFS": 0, "MPS": 1}


def _entry(inventory, code: str) -> EmojiEntry | None:
    if isinstance(inventory, Mapping):
        return inventory.get(code)
    return next((e for e in inventory if e.unicode == code), None)


def lesk_rank(
    occurrence: EmojiOccurrence, inventory, lexicon: Lexicon, include_examples: bool = True
) -> LeskResult:
    """Rank the senses of ``occurrence`` by overlap with its surrounding text."""
    entry = _entry(inventory, occurrence.unicode)
    if entry is None or not entry.senses:
        raise NoSensesError(occurrence.unicode)
    context = content_words(occurrence.surrounding_text)
    scores = []
    for sense in entry.senses:
        shared = frozenset(context & gloss_words(sense, lexicon, include_examples))
        scores.append(SenseScore(sense, len(shared), shared))
    scores.sort(key=lambda s: (-s.overlap, _PROVENANCE_RANK[s.sense.provenance], s.sense.word, s.sense.pos))
    return LeskResult(occurrence.unicode, tuple(scores), undecided=scores[0].overlap == 0)


def disambiguate_text(
    text: str, inventory: Mapping[str, EmojiEntry], lexicon: Lexicon, window: int | None = None,
    include_examples: bool = True,
) -> list[dict]:
    """JSON-ready ranking for every emoji occurrence in ``text``."""
    results = []
    for occ in extract_emoji(text, inventory, window=window):
        rec = occ.to_record()
        entry = inventory.get(occ.unicode)
        if occ.unknown or entry is None or not entry.senses:
            rec.update(undecided=True, senses=[])
        else:
            ranked = lesk_rank(occ, inventory, lexicon, include_examples)
            rec.update(undecided=ranked.undecided, senses=[s.to_record() for s in ranked.scores])
        results.append(rec)
    return results
