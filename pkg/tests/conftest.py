from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from emojinet.ingest import Lexicon, LexiconEntry, LexiconSense  # noqa: E402
from emojinet.pipeline import BuildConfig, build  # noqa: E402

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"
BUILD_FIXTURE = FIXTURES / "build"
ALIGN_FIXTURE = FIXTURES / "align"

ACCEPTANCE_RESULTS: dict[str, str] = {}


def build_config(out_dir: Path, **overrides) -> BuildConfig:
    d = BUILD_FIXTURE
    kwargs = dict(
        unicode_list=d / "unicode_list.jsonl",
        emojipedia=d / "emojipedia.jsonl",
        iemoji=d / "iemoji.jsonl",
        emoji_dictionary=d / "emoji_dictionary.jsonl",
        lexicon=d / "lexicon.jsonl",
        corpus=d / "corpus.jsonl",
        images_dir=d / "images",
        output=out_dir / "inventory.jsonl",
        report=out_dir / "report.json",
    )
    kwargs.update(overrides)
    return BuildConfig(**kwargs)


@pytest.fixture(scope="session")
def built(tmp_path_factory):
    """One fixture build shared by read-only tests: (config, report)."""
    out = tmp_path_factory.mktemp("build")
    config = build_config(out)
    report = build(config)
    return config, report


def make_pray_lexicon() -> Lexicon:
    """Glosses whose content words are exactly the reference pray and high-five word sets."""
    return Lexicon(
        [
            LexiconEntry(
                "pray",
                "verb",
                (
                    LexiconSense(
                        "pray.v.01",
                        ("To pray to god or a saint in worship", "To a higher god in thanksgiving and confession"),
                    ),
                ),
            ),
            LexiconEntry(
                "high five",
                "noun",
                (
                    LexiconSense(
                        "high_five.n.01",
                        (
                            "A high five is to raise a hand above the head",
                            "To slide a palm against the palm of a person",
                            "To celebrate with a person",
                        ),
                    ),
                ),
            ),
        ]
    )


@pytest.fixture(scope="session")
def pray_lexicon() -> Lexicon:
    return make_pray_lexicon()


def write_jsonl(path: Path, records) -> Path:
    path.write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records), encoding="utf-8")
    return path


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{outcome:4}  {name}")
