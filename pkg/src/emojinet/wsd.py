"""Sense-id assignment for filtered labels.

Labels seen in the annotated corpus take their most frequent sense (MFS).
The rest fall back to the most popular sense (MPS): the candidate sense with
the most glosses in the lexicon. Ties are broken by the smallest sense id
and written to a tie report instead of being resolved at random.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from .errors import SenseLookupError
from .ingest import AnnotatedToken, Lexicon
from .inventory import SenseAssignment
from .senses import SenseLabel


@dataclass(frozen=True)
class TieRecord:
    lemma: str
    pos: str
    candidates: tuple[str, ...]
    chosen: str
    mechanism: str

    def to_record(self) -> dict:
        return {
            "lemma": self.lemma,
            "pos": self.pos,
            "candidates": list(self.candidates),
            "chosen": self.chosen,
            "mechanism": self.mechanism,
        }


@dataclass
class MfsTable(Mapping):
    """(lemma, pos) -> (sense_id, occurrence_count)."""

    table: dict[tuple[str, str], tuple[str, int]] = field(default_factory=dict)
    ties: list[TieRecord] = field(default_factory=list)

    def __getitem__(self, key):
        return self.table[key]

    def __iter__(self) -> Iterator[tuple[str, str]]:
        return iter(self.table)

    def __len__(self) -> int:
        return len(self.table)


def compute_mfs(corpus: Iterable[AnnotatedToken], lexicon: Lexicon | None = None) -> MfsTable:
    """Most frequent sense per (lemma, pos) over an annotated corpus.

    With ``lexicon`` given, tokens whose sense id does not resolve are skipped
    so every chosen sense can be looked up later.
    """
    counts: dict[tuple[str, str], Counter] = {}
    for tok in corpus:
        if lexicon is not None:
            try:
                lexicon.sense(tok.lemma, tok.pos, tok.sense_id)
            except SenseLookupError:
                continue
        counts.setdefault((tok.lemma, tok.pos), Counter())[tok.sense_id] += 1

    result = MfsTable()
    for key in sorted(counts):
        counter = counts[key]
        top = max(counter.values())
        winners = sorted(sid for sid, n in counter.items() if n == top)
        result.table[key] = (winners[0], top)
        if len(winners) > 1:
            result.ties.append(TieRecord(key[0], key[1], tuple(winners), winners[0], "MFS"))
    return result


def mps_candidates(lexicon: Lexicon, lemma: str, pos: str) -> list[str]:
    """Sense ids sharing the largest gloss count, smallest id first."""
    senses = lexicon.senses(lemma, pos)
    top = max(len(s.glosses) for s in senses)
    return sorted(s.sense_id for s in senses if len(s.glosses) == top)


def compute_mps(lexicon: Lexicon, lemma: str, pos: str) -> str:
    return mps_candidates(lexicon, lemma, pos)[0]


def assign_senses(
    labels: Iterable[SenseLabel],
    mfs: Mapping[tuple[str, str], tuple[str, int]],
    lexicon: Lexicon,
    tie_log: list[TieRecord] | None = None,
) -> frozenset[SenseAssignment]:
    """Attach a sense id, first gloss and examples to every label.

    MPS ties are appended to ``tie_log`` when one is supplied.
    """
    out = set()
    for label in sorted(labels):
        key = (label.word, label.pos)
        if not lexicon.has(*key):
            raise SenseLookupError(
                f"internal error: filtered label {label.word}({label.pos}) is missing from the lexicon"
            )
        if key in mfs:
            sense_id, provenance = mfs[key][0], "MFS"
        else:
            candidates = mps_candidates(lexicon, *key)
            sense_id, provenance = candidates[0], "MPS"
            if len(candidates) > 1 and tie_log is not None:
                tie_log.append(TieRecord(label.word, label.pos, tuple(candidates), sense_id, "MPS"))
        sense = lexicon.sense(label.word, label.pos, sense_id)
        out.add(
            SenseAssignment(
                word=label.word,
                pos=label.pos,
                sense_id=sense_id,
                gloss=sense.glosses[0],
                examples=sense.examples,
                provenance=provenance,
                origin=label.origin,
            )
        )
    return frozenset(out)


def write_tie_report(ties: Iterable[TieRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for t in ties:
            f.write(json.dumps(t.to_record(), ensure_ascii=False) + "\n")
