"""Emoji records, codepoint canonicalization and the inventory.jsonl format.

An inventory is a set of :class:`EmojiEntry` values. Each entry carries eight
fields: unicode, shortcode, description, keywords, images, related,
categories and senses. Entries are immutable; set-valued fields are stored
as frozensets so that entries hash and compare structurally.
"""

from __future__ import annotations

import json
import os
import re
from collections.abc import Iterable
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CodepointError, DuplicateKeyError, SchemaError, ValidationError

POS_TAGS = ("noun", "verb", "adjective")
PROVENANCES = ("MFS", "MPS")
ORIGINS = ("seed", "agreed")

VARIATION_SELECTOR = 0xFE0F

_TOKEN_RE = re.compile(r"^U\+([0-9A-F]{1,6})$", re.IGNORECASE)
_SPLIT_RE = re.compile(r"[\s,\-]+")
_CANONICAL_RE = re.compile(r"^U\+[0-9A-F]{4,6}(-U\+[0-9A-F]{4,6})*$")


def _format(cp: int) -> str:
    return f"U+{cp:04X}"


def canonicalize_codepoint(raw) -> str:
    """Return the canonical ``U+XXXX[-U+XXXX...]`` form of ``raw``.

    ``raw`` may be a literal emoji string, a ``U+XXXX`` token, or several
    tokens separated by whitespace, commas or hyphens. A sequence of ints is
    also accepted. U+FE0F is dropped everywhere.

    >>> canonicalize_codepoint("u+1f602")
    'U+1F602'
    >>> canonicalize_codepoint("U+1F1F7 U+1F1FA")
    'U+1F1F7-U+1F1FA'
    """
    if isinstance(raw, (list, tuple)):
        cps = [int(c) for c in raw]
    elif isinstance(raw, str):
        text = raw.strip()
        if not text:
            raise CodepointError(raw, "empty codepoint string")
        if text[:2].upper() == "U+":
            cps = []
            for token in _SPLIT_RE.split(text):
                if not token:
                    continue
                m = _TOKEN_RE.match(token)
                if m is None:
                    raise CodepointError(token)
                cps.append(int(m.group(1), 16))
        else:
            cps = [ord(ch) for ch in text]
    else:
        raise CodepointError(repr(raw), f"unsupported codepoint input type {type(raw).__name__}")

    for cp in cps:
        if not 0 <= cp <= 0x10FFFF:
            raise CodepointError(hex(cp), f"codepoint {cp:#x} out of range")
    cps = [cp for cp in cps if cp != VARIATION_SELECTOR]
    if not cps:
        raise CodepointError(str(raw), "no codepoints left after stripping variation selectors")
    return "-".join(_format(cp) for cp in cps)


def is_canonical(code: str) -> bool:
    if not isinstance(code, str) or not _CANONICAL_RE.match(code):
        return False
    return "U+FE0F" not in code.split("-")


def codepoints(code: str) -> tuple[int, ...]:
    """Integer codepoints of a canonical string."""
    return tuple(int(tok[2:], 16) for tok in code.split("-"))


def to_text(code: str) -> str:
    """Render a canonical codepoint string as the literal characters."""
    return "".join(chr(cp) for cp in codepoints(code))


@dataclass(frozen=True, order=True)
class SenseAssignment:
    word: str
    pos: str
    sense_id: str
    gloss: str
    examples: tuple[str, ...] = ()
    provenance: str = "MFS"
    origin: str = "seed"

    def __post_init__(self):
        object.__setattr__(self, "examples", tuple(self.examples))

    @property
    def key(self) -> tuple[str, str]:
        return (self.word, self.pos)

    def to_record(self) -> dict:
        return {
            "word": self.word,
            "pos": self.pos,
            "sense_id": self.sense_id,
            "gloss": self.gloss,
            "examples": list(self.examples),
            "provenance": self.provenance,
            "origin": self.origin,
        }


@dataclass(frozen=True, order=True)
class EmojiImage:
    platform: str
    path: str


@dataclass(frozen=True)
class EmojiEntry:
    unicode: str
    shortcode: str | None = None
    description: str | None = None
    keywords: frozenset[str] = field(default_factory=frozenset)
    images: frozenset[EmojiImage] = field(default_factory=frozenset)
    related: frozenset[str] = field(default_factory=frozenset)
    categories: frozenset[str] = field(default_factory=frozenset)
    senses: frozenset[SenseAssignment] = field(default_factory=frozenset)

    def __post_init__(self):
        images = frozenset(
            img if isinstance(img, EmojiImage) else EmojiImage(*img) for img in self.images
        )
        object.__setattr__(self, "keywords", frozenset(self.keywords))
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "related", frozenset(self.related))
        object.__setattr__(self, "categories", frozenset(self.categories))
        object.__setattr__(self, "senses", frozenset(self.senses))

    def validate(self) -> None:
        """Raise :class:`ValidationError` on the first broken invariant."""
        u = self.unicode
        if not is_canonical(u):
            raise ValidationError(u, "unicode", "not a canonical codepoint string")
        for name in ("shortcode", "description"):
            value = getattr(self, name)
            if value is not None and not isinstance(value, str):
                raise ValidationError(u, name, "must be a string or null")
        if self.shortcode is not None and (not self.shortcode or self.shortcode != self.shortcode.lower()):
            raise ValidationError(u, "shortcode", f"must be non-empty lowercase, got {self.shortcode!r}")
        for name in ("keywords", "categories"):
            for item in getattr(self, name):
                if not isinstance(item, str) or not item:
                    raise ValidationError(u, name, f"empty or non-string element {item!r}")
        for kw in self.keywords:
            if kw != kw.lower():
                raise ValidationError(u, "keywords", f"keyword {kw!r} is not lowercase")
        for img in self.images:
            if not img.platform or not img.path:
                raise ValidationError(u, "images", f"incomplete image {img!r}")
        for ref in self.related:
            if not is_canonical(ref):
                raise ValidationError(u, "related", f"{ref!r} is not a canonical codepoint string")
        seen = set()
        for s in self.senses:
            if s.pos not in POS_TAGS:
                raise ValidationError(u, "senses", f"{s.word}({s.pos}): pos must be one of {POS_TAGS}")
            if s.provenance not in PROVENANCES:
                raise ValidationError(u, "senses", f"{s.word}({s.pos}): bad provenance {s.provenance!r}")
            if s.origin not in ORIGINS:
                raise ValidationError(u, "senses", f"{s.word}({s.pos}): bad origin {s.origin!r}")
            if not s.word or s.word != s.word.lower():
                raise ValidationError(u, "senses", f"word {s.word!r} must be a non-empty lowercase lemma")
            if not s.sense_id:
                raise ValidationError(u, "senses", f"{s.word}({s.pos}): empty sense_id")
            if s.key in seen:
                raise ValidationError(u, "senses", f"duplicate sense label {s.word}({s.pos})")
            seen.add(s.key)

    def to_record(self) -> dict:
        return {
            "unicode": self.unicode,
            "shortcode": self.shortcode,
            "description": self.description,
            "keywords": sorted(self.keywords),
            "images": [{"platform": i.platform, "path": i.path} for i in sorted(self.images)],
            "related": sorted(self.related),
            "categories": sorted(self.categories),
            "senses": [s.to_record() for s in sorted(self.senses, key=lambda s: (s.word, s.pos))],
        }

    @classmethod
    def from_record(cls, rec: dict) -> EmojiEntry:
        return cls(
            unicode=rec["unicode"],
            shortcode=rec.get("shortcode"),
            description=rec.get("description"),
            keywords=frozenset(rec.get("keywords", ())),
            images=frozenset(EmojiImage(i["platform"], i["path"]) for i in rec.get("images", ())),
            related=frozenset(rec.get("related", ())),
            categories=frozenset(rec.get("categories", ())),
            senses=frozenset(
                SenseAssignment(
                    word=s["word"],
                    pos=s["pos"],
                    sense_id=s["sense_id"],
                    gloss=s["gloss"],
                    examples=tuple(s.get("examples", ())),
                    provenance=s["provenance"],
                    origin=s["origin"],
                )
                for s in rec.get("senses", ())
            ),
        )


def dumps_entry(entry: EmojiEntry) -> str:
    """One inventory.jsonl line, without the trailing newline."""
    return json.dumps(entry.to_record(), ensure_ascii=False)


def serialize_inventory(entries: Iterable[EmojiEntry]) -> str:
    entries = list(entries)
    seen: set[str] = set()
    for e in entries:
        e.validate()
        if e.unicode in seen:
            raise ValidationError(e.unicode, "unicode", "duplicate codepoint in inventory")
        seen.add(e.unicode)
    return "".join(dumps_entry(e) + "\n" for e in sorted(entries, key=lambda e: e.unicode))


def write_text_atomic(path, text: str) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        tmp.unlink(missing_ok=True)
        raise OSError(exc.errno, f"cannot write {path}: {exc.strerror}") from exc


def save_inventory(entries: Iterable[EmojiEntry], path) -> None:
    """Write ``entries`` to ``path`` as deterministic inventory JSONL."""
    write_text_atomic(path, serialize_inventory(entries))


def parse_inventory(lines: Iterable[str], source="<inventory>") -> set[EmojiEntry]:
    entries: dict[str, EmojiEntry] = {}
    for index, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaError(source, index, None, f"invalid JSON: {exc.msg}") from exc
        if not isinstance(rec, dict):
            raise SchemaError(source, index, None, "record is not a JSON object")
        try:
            entry = EmojiEntry.from_record(rec)
        except (KeyError, TypeError) as exc:
            raise SchemaError(source, index, None, f"malformed record: {exc!r}") from exc
        try:
            entry.validate()
        except ValidationError as exc:
            raise SchemaError(source, index, exc.field, str(exc)) from exc
        if entry.unicode in entries:
            raise DuplicateKeyError(source, index, entry.unicode)
        entries[entry.unicode] = entry
    return set(entries.values())


def load_inventory(path) -> set[EmojiEntry]:
    with open(path, encoding="utf-8") as f:
        return parse_inventory(f, source=path)


OCTUPLE_FIELDS = ("u", "c", "d", "K", "I", "R", "H", "S")


def inventory_stats(entries: Iterable[EmojiEntry]) -> dict[str, tuple[int, int]]:
    """Per octuple field: (entries with a non-empty value, total items)."""
    stats = {f: [0, 0] for f in OCTUPLE_FIELDS}
    for e in entries:
        for f, value in (("u", e.unicode), ("c", e.shortcode), ("d", e.description)):
            if value:
                stats[f][0] += 1
                stats[f][1] += 1
        for f, items in (
            ("K", e.keywords),
            ("I", e.images),
            ("R", e.related),
            ("H", e.categories),
            ("S", e.senses),
        ):
            if items:
                stats[f][0] += 1
                stats[f][1] += len(items)
    return {f: (c, n) for f, (c, n) in stats.items()}


def lint_related(entries: Iterable[EmojiEntry]) -> list[tuple[str, str]]:
    """(unicode, dangling reference) for every related codepoint not in the inventory."""
    entries = list(entries)
    known = {e.unicode for e in entries}
    return sorted((e.unicode, r) for e in entries for r in e.related if r not in known)
