"""Parsers for the six source dumps and the codepoint merge.

All inputs are UTF-8 JSONL. Schemas (unknown keys are ignored):

unicode_list      {"unicode", "keywords": [str], "images": [{"platform", "path"}]}
emojipedia        {"unicode", "shortcode", "description", "related": [str], "categories": [str]}
iemoji            {"unicode", "keywords": [str]}
emoji_dictionary  {"image_path", "sense_labels": [{"word", "pos", "submission_count"}]}
lexicon           {"lemma", "pos", "senses": [{"sense_id", "glosses": [str], "examples": [str]}]}
corpus            {"surface", "lemma", "pos", "sense_id"}
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CodepointError, DuplicateKeyError, SchemaError, SenseLookupError
from .inventory import POS_TAGS, EmojiEntry, EmojiImage, canonicalize_codepoint

EMOJIPEDIA_CATEGORIES = frozenset(
    {
        "Smileys & People",
        "Animals & Nature",
        "Food & Drink",
        "Activity",
        "Travel & Places",
        "Objects",
        "Symbols",
        "Flags",
    }
)


def normalize_word(word: str) -> str:
    """Lowercase, trim and collapse inner whitespace ("High  Five" -> "high five")."""
    return " ".join(word.split()).lower()


@dataclass(frozen=True)
class UnicodeListRecord:
    unicode: str
    keywords: frozenset[str] = frozenset()
    images: frozenset[EmojiImage] = frozenset()


@dataclass(frozen=True)
class EmojipediaRecord:
    unicode: str
    shortcode: str | None = None
    description: str | None = None
    related: frozenset[str] = frozenset()
    categories: frozenset[str] = frozenset()


@dataclass(frozen=True)
class IEmojiRecord:
    unicode: str
    keywords: frozenset[str] = frozenset()


@dataclass(frozen=True)
class RawLabel:
    word: str
    pos: str
    submission_count: int


@dataclass(frozen=True)
class EmojiDictionaryRecord:
    image_path: str
    sense_labels: tuple[RawLabel, ...] = ()


@dataclass(frozen=True)
class LexiconSense:
    sense_id: str
    glosses: tuple[str, ...]
    examples: tuple[str, ...] = ()


@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    pos: str
    senses: tuple[LexiconSense, ...]


@dataclass(frozen=True)
class AnnotatedToken:
    surface: str
    lemma: str
    pos: str
    sense_id: str


class Lexicon:
    """(lemma, pos) -> senses lookup, standing in for a sense network export."""

    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        self._entries: dict[tuple[str, str], LexiconEntry] = {}
        for e in entries:
            key = (e.lemma, e.pos)
            if key in self._entries:
                raise ValueError(f"duplicate lexicon entry {e.lemma}({e.pos})")
            self._entries[key] = e

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self._entries.values())

    def __contains__(self, key) -> bool:
        return key in self._entries

    def has(self, lemma: str, pos: str) -> bool:
        return (lemma, pos) in self._entries

    def entry(self, lemma: str, pos: str) -> LexiconEntry:
        try:
            return self._entries[(lemma, pos)]
        except KeyError:
            raise SenseLookupError(f"no lexicon entry for {lemma}({pos})") from None

    def senses(self, lemma: str, pos: str) -> tuple[LexiconSense, ...]:
        return self.entry(lemma, pos).senses

    def sense(self, lemma: str, pos: str, sense_id: str) -> LexiconSense:
        for s in self.entry(lemma, pos).senses:
            if s.sense_id == sense_id:
                return s
        raise SenseLookupError(f"sense {sense_id!r} is not listed under {lemma}({pos})")


# --- JSONL plumbing -------------------------------------------------------


def iter_jsonl(path) -> Iterator[tuple[int, dict]]:
    """Yield ``(record_index, object)``; blank lines are skipped, indices are 1-based lines."""
    with open(path, encoding="utf-8") as f:
        for index, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(path, index, None, f"invalid JSON: {exc.msg}") from exc
            if not isinstance(rec, dict):
                raise SchemaError(path, index, None, "record is not a JSON object")
            yield index, rec


class _Record:
    """Field accessors that raise SchemaError with the record position."""

    def __init__(self, path, index: int, rec: dict):
        self.path, self.index, self.rec = path, index, rec

    def fail(self, name, message) -> SchemaError:
        return SchemaError(self.path, self.index, name, message)

    def string(self, name, optional=False) -> str | None:
        value = self.rec.get(name)
        if value is None and optional:
            return None
        if not isinstance(value, str) or not value.strip():
            raise self.fail(name, "expected a non-empty string")
        return value

    def strings(self, name, optional=True) -> list[str]:
        value = self.rec.get(name)
        if value is None and optional:
            return []
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise self.fail(name, "expected a list of strings")
        return value

    def objects(self, name) -> list[dict]:
        value = self.rec.get(name, [])
        if not isinstance(value, list) or not all(isinstance(v, dict) for v in value):
            raise self.fail(name, "expected a list of objects")
        return value

    def codepoint(self, name="unicode") -> str:
        raw = self.string(name)
        try:
            return canonicalize_codepoint(raw)
        except CodepointError as exc:
            raise self.fail(name, str(exc)) from exc


def _clean_words(r: _Record, name: str) -> frozenset[str]:
    words = {normalize_word(w) for w in r.strings(name)}
    words.discard("")
    return frozenset(words)


def _keyed(path, records: Iterable[tuple[int, object]], key) -> list:
    out, seen = [], set()
    for index, record in records:
        k = key(record)
        if k in seen:
            raise DuplicateKeyError(path, index, k)
        seen.add(k)
        out.append(record)
    return out


def parse_unicode_list(path) -> list[UnicodeListRecord]:
    def records():
        for index, rec in iter_jsonl(path):
            r = _Record(path, index, rec)
            images = set()
            for img in r.objects("images"):
                platform, img_path = img.get("platform"), img.get("path")
                if not isinstance(platform, str) or not platform or not isinstance(img_path, str) or not img_path:
                    raise r.fail("images", "each image needs non-empty 'platform' and 'path'")
                images.add(EmojiImage(platform, img_path))
            yield index, UnicodeListRecord(r.codepoint(), _clean_words(r, "keywords"), frozenset(images))

    return _keyed(path, records(), lambda rec: rec.unicode)


def parse_emojipedia(path) -> list[EmojipediaRecord]:
    def records():
        for index, rec in iter_jsonl(path):
            r = _Record(path, index, rec)
            shortcode = r.string("shortcode", optional=True)
            if shortcode is not None:
                shortcode = shortcode.strip().strip(":").lower()
            related = set()
            for raw in r.strings("related"):
                try:
                    related.add(canonicalize_codepoint(raw))
                except CodepointError as exc:
                    raise r.fail("related", str(exc)) from exc
            categories = frozenset(c.strip() for c in r.strings("categories"))
            unknown = categories - EMOJIPEDIA_CATEGORIES
            if unknown:
                raise r.fail("categories", f"unknown categories {sorted(unknown)}")
            yield index, EmojipediaRecord(
                unicode=r.codepoint(),
                shortcode=shortcode,
                description=r.string("description", optional=True),
                related=frozenset(related),
                categories=categories,
            )

    return _keyed(path, records(), lambda rec: rec.unicode)


def parse_iemoji(path) -> list[IEmojiRecord]:
    def records():
        for index, rec in iter_jsonl(path):
            r = _Record(path, index, rec)
            yield index, IEmojiRecord(r.codepoint(), _clean_words(r, "keywords"))

    return _keyed(path, records(), lambda rec: rec.unicode)


def parse_emoji_dictionary(path) -> list[EmojiDictionaryRecord]:
    def records():
        for index, rec in iter_jsonl(path):
            r = _Record(path, index, rec)
            counts: dict[tuple[str, str], int] = {}
            for lab in r.objects("sense_labels"):
                word, pos, count = lab.get("word"), lab.get("pos"), lab.get("submission_count")
                if not isinstance(word, str) or not normalize_word(word):
                    raise r.fail("sense_labels", f"label without a word: {lab!r}")
                if pos not in POS_TAGS:
                    raise r.fail("sense_labels", f"pos must be one of {POS_TAGS}, got {pos!r}")
                if isinstance(count, bool) or not isinstance(count, int) or count < 1:
                    raise r.fail("sense_labels", f"submission_count must be a positive integer, got {count!r}")
                key = (normalize_word(word), pos)
                counts[key] = counts.get(key, 0) + count
            labels = tuple(RawLabel(w, p, c) for (w, p), c in counts.items())
            yield index, EmojiDictionaryRecord(r.string("image_path"), labels)

    return _keyed(path, records(), lambda rec: rec.image_path)


def parse_lexicon(path) -> Lexicon:
    def records():
        for index, rec in iter_jsonl(path):
            r = _Record(path, index, rec)
            lemma = normalize_word(r.string("lemma"))
            pos = r.string("pos").strip().lower()
            senses, ids = [], set()
            for s in r.objects("senses"):
                sid = s.get("sense_id")
                if not isinstance(sid, str) or not sid:
                    raise r.fail("senses", "sense without a sense_id")
                if sid in ids:
                    raise r.fail("senses", f"sense_id {sid!r} listed twice")
                ids.add(sid)
                glosses, examples = s.get("glosses"), s.get("examples", [])
                if not isinstance(glosses, list) or not glosses or not all(isinstance(g, str) and g for g in glosses):
                    raise r.fail("senses", f"sense {sid!r} needs at least one non-empty gloss")
                if not isinstance(examples, list) or not all(isinstance(x, str) for x in examples):
                    raise r.fail("senses", f"sense {sid!r}: examples must be a list of strings")
                senses.append(LexiconSense(sid, tuple(glosses), tuple(examples)))
            if not senses:
                raise r.fail("senses", "entry has no senses")
            yield index, LexiconEntry(lemma, pos, tuple(senses))

    return Lexicon(_keyed(path, records(), lambda e: f"{e.lemma}({e.pos})"))


def parse_corpus(path) -> list[AnnotatedToken]:
    tokens = []
    for index, rec in iter_jsonl(path):
        r = _Record(path, index, rec)
        tokens.append(
            AnnotatedToken(
                surface=r.string("surface"),
                lemma=normalize_word(r.string("lemma")),
                pos=r.string("pos").strip().lower(),
                sense_id=r.string("sense_id"),
            )
        )
    return tokens


def lint_corpus(tokens: Iterable[AnnotatedToken], lexicon: Lexicon) -> list[tuple[int, AnnotatedToken]]:
    """Tokens (with their 0-based position) whose sense id does not resolve in ``lexicon``."""
    bad = []
    for i, tok in enumerate(tokens):
        try:
            lexicon.sense(tok.lemma, tok.pos, tok.sense_id)
        except SenseLookupError:
            bad.append((i, tok))
    return bad


# --- merge ----------------------------------------------------------------


@dataclass(frozen=True)
class Unmatched:
    source: str
    unicode: str


@dataclass
class MergeResult:
    entries: list[EmojiEntry]
    unmatched: list[Unmatched] = field(default_factory=list)


def merge_by_codepoint(
    unicode_list: Iterable[UnicodeListRecord],
    emojipedia: Iterable[EmojipediaRecord],
    iemoji: Iterable[IEmojiRecord],
) -> MergeResult:
    """Join the three codepoint-keyed resources on their canonical codepoint.

    The Unicode list is authoritative: one entry per record in it. Emojipedia
    and iEmoji records without a counterpart are reported in ``unmatched``.
    Senses are left empty.
    """
    base = {r.unicode: r for r in unicode_list}
    pedia = {r.unicode: r for r in emojipedia}
    ie = {r.unicode: r for r in iemoji}

    entries = []
    for code in sorted(base):
        u = base[code]
        p = pedia.get(code)
        i = ie.get(code)
        entries.append(
            EmojiEntry(
                unicode=code,
                shortcode=p.shortcode if p else None,
                description=p.description if p else None,
                keywords=u.keywords | (i.keywords if i else frozenset()),
                images=u.images,
                related=p.related if p else frozenset(),
                categories=p.categories if p else frozenset(),
            )
        )
    unmatched = [Unmatched("emojipedia", c) for c in sorted(set(pedia) - set(base))]
    unmatched += [Unmatched("iemoji", c) for c in sorted(set(ie) - set(base))]
    return MergeResult(entries, unmatched)
