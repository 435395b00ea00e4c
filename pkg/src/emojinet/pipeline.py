"""End-to-end build: parse, merge, align images, filter labels, assign senses, save."""

from __future__ import annotations

import json
import logging
import os
import time
from contextlib import contextmanager
from dataclasses import dataclass, field, replace
from pathlib import Path

from . import images as img
from .errors import PipelineError
from .ingest import (
    RawLabel,
    lint_corpus,
    merge_by_codepoint,
    parse_corpus,
    parse_emoji_dictionary,
    parse_emojipedia,
    parse_iemoji,
    parse_lexicon,
    parse_unicode_list,
)
from .inventory import inventory_stats, lint_related, serialize_inventory
from .senses import INVALID_POS, NOT_SEED_NOT_AGREED, filter_labels, seed_keywords
from .wsd import assign_senses, compute_mfs

log = logging.getLogger(__name__)


@dataclass
class BuildConfig:
    unicode_list: Path
    emojipedia: Path
    iemoji: Path
    emoji_dictionary: Path
    lexicon: Path
    corpus: Path
    images_dir: Path
    output: Path
    report: Path
    max_dissimilarity: float | None = None
    workers: int | None = None

    def __post_init__(self):
        for name in ("unicode_list", "emojipedia", "iemoji", "emoji_dictionary", "lexicon",
                     "corpus", "images_dir", "output", "report"):
            setattr(self, name, Path(getattr(self, name)))

    def side_report(self, kind: str) -> Path:
        return self.report.with_name(f"{self.report.stem}.{kind}.jsonl")


@dataclass
class BuildReport:
    counts: dict = field(default_factory=dict)
    reports: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"counts": self.counts, "reports": self.reports, "timings": self.timings}


def _jsonl(records) -> str:
    return "".join(json.dumps(r, ensure_ascii=False, sort_keys=True) + "\n" for r in records)


def build(config: BuildConfig) -> BuildReport:
    """Run every stage; nothing is written unless all stages succeed."""
    report = BuildReport()
    counts = report.counts

    @contextmanager
    def stage(name):
        t0 = time.perf_counter()
        try:
            yield
        except PipelineError:
            raise
        except Exception as exc:
            raise PipelineError(name, exc) from exc
        finally:
            report.timings[name] = round(time.perf_counter() - t0, 6)
        log.info("stage %s done in %.3fs", name, report.timings[name])

    with stage("parse"):
        e_u = parse_unicode_list(config.unicode_list)
        e_p = parse_emojipedia(config.emojipedia)
        e_ie = parse_iemoji(config.iemoji)
        e_ed = parse_emoji_dictionary(config.emoji_dictionary)
        lexicon = parse_lexicon(config.lexicon)
        corpus = parse_corpus(config.corpus)
        counts["parsed"] = {
            "unicode_list": len(e_u),
            "emojipedia": len(e_p),
            "iemoji": len(e_ie),
            "emoji_dictionary": len(e_ed),
            "lexicon": len(lexicon),
            "corpus": len(corpus),
        }

    with stage("merge"):
        merged = merge_by_codepoint(e_u, e_p, e_ie)
        entries = {e.unicode: e for e in merged.entries}
        unmatched = [{"source": u.source, "unicode": u.unicode} for u in merged.unmatched]
        counts["merge"] = {"entries": len(entries), "unmatched": len(merged.unmatched)}

    with stage("align"):
        alignments = []
        if e_ed:
            examples = [
                (config.images_dir / image.path, e.unicode)
                for e in merged.entries
                for image in sorted(e.images)
            ]
            example_fps = img.fingerprint_many(examples, workers=config.workers)
            test_fps = img.fingerprint_many(
                [(config.images_dir / r.image_path, None) for r in e_ed], workers=config.workers
            )
            alignments = [
                replace(a, test_path=r.image_path)
                for a, r in zip(img.align(test_fps, example_fps), e_ed)
            ]
        labels_by_emoji: dict[str, list[RawLabel]] = {}
        quarantined = 0
        for record, a in zip(e_ed, alignments):
            if config.max_dissimilarity is not None and a.dissimilarity > config.max_dissimilarity:
                quarantined += 1
                unmatched.append(
                    {
                        "source": "emoji_dictionary",
                        "image_path": record.image_path,
                        "matched_unicode": a.matched_unicode,
                        "dissimilarity": a.dissimilarity,
                        "labels": len(record.sense_labels),
                    }
                )
                continue
            labels_by_emoji.setdefault(a.matched_unicode, []).extend(record.sense_labels)
        counts["alignment"] = {
            "test_images": len(e_ed),
            "aligned": len(e_ed) - quarantined,
            "quarantined": quarantined,
            "emoji_with_labels": len(labels_by_emoji),
        }

    with stage("filter"):
        kept_by_emoji = {}
        rejections = []
        raw_total = sum(len(r.sense_labels) for r in e_ed)
        unaligned = sum(u.get("labels", 0) for u in unmatched)
        raw = 0
        for code in sorted(labels_by_emoji):
            labels = labels_by_emoji[code]
            raw += len({(lab.word, lab.pos) for lab in labels})
            result = filter_labels(labels, seed_keywords(entries[code]), lexicon)
            kept_by_emoji[code] = result.kept
            rejections += [r.to_record(code) for r in result.rejected]
        kept = sum(len(k) for k in kept_by_emoji.values())
        counts["labels"] = {
            "submitted": raw_total,
            "unaligned": unaligned,
            "folded": raw_total - unaligned - raw,
            "raw": raw,
            "kept": kept,
            "kept_seed": sum(1 for k in kept_by_emoji.values() for lab in k if lab.origin == "seed"),
            "kept_agreed": sum(1 for k in kept_by_emoji.values() for lab in k if lab.origin == "agreed"),
            "rejected": len(rejections),
            "rejected_by_reason": {
                reason: sum(1 for r in rejections if r["reason"] == reason)
                for reason in (NOT_SEED_NOT_AGREED, INVALID_POS)
            },
        }

    with stage("wsd"):
        mfs = compute_mfs(corpus, lexicon)
        ties = list(mfs.ties)
        for code in sorted(kept_by_emoji):
            senses = assign_senses(kept_by_emoji[code], mfs, lexicon, tie_log=ties)
            entries[code] = replace(entries[code], senses=senses)
        provenance = [s.provenance for e in entries.values() for s in e.senses]
        counts["assignments"] = {
            "MFS": provenance.count("MFS"),
            "MPS": provenance.count("MPS"),
            "total": len(provenance),
        }
        counts["ties"] = {m: sum(1 for t in ties if t.mechanism == m) for m in ("MFS", "MPS")}
        counts["corpus_unresolved_tokens"] = len(lint_corpus(corpus, lexicon))

    with stage("save"):
        final = list(entries.values())
        inventory_text = serialize_inventory(final)
        stats = inventory_stats(final)
        counts["stats"] = {k: list(v) for k, v in stats.items()}
        counts["dangling_related"] = len(lint_related(final))
        side = {
            "unmatched": _jsonl(unmatched),
            "rejections": _jsonl(rejections),
            "ties": _jsonl(t.to_record() for t in ties),
            "alignment": _jsonl(a.to_record() for a in alignments),
        }
        report.reports = {kind: config.side_report(kind).name for kind in side}
        _check_report(counts)

        outputs = [(config.output, inventory_text)]
        outputs += [(config.side_report(kind), text) for kind, text in side.items()]
        for path, _ in outputs + [(config.report, "")]:
            path.parent.mkdir(parents=True, exist_ok=True)
        tmp_paths = []
        try:
            for path, text in outputs:
                tmp = path.with_name(path.name + ".tmp")
                tmp.write_text(text, encoding="utf-8", newline="\n")
                tmp_paths.append((tmp, path))
            for tmp, path in tmp_paths:
                os.replace(tmp, path)
        finally:
            for tmp, _ in tmp_paths:
                tmp.unlink(missing_ok=True)

    config.report.write_text(
        json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
        newline="\n",
    )
    return report


def _check_report(counts: dict) -> None:
    labels, assignments = counts["labels"], counts["assignments"]
    if labels["kept"] + labels["rejected"] != labels["raw"]:
        raise AssertionError("kept + rejected labels do not add up to the raw label count")
    if assignments["MFS"] + assignments["MPS"] != labels["kept"]:
        raise AssertionError("MFS + MPS assignments do not add up to the kept label count")
