from hypothesis import given
from hypothesis import strategies as st

from emojinet.ingest import Lexicon, LexiconEntry, LexiconSense, RawLabel
from emojinet.inventory import EmojiEntry
from emojinet.senses import INVALID_POS, NOT_SEED_NOT_AGREED, SenseLabel, filter_labels, seed_keywords

LEX = Lexicon(
    [
        LexiconEntry(w, p, (LexiconSense(f"{w}.{p[0]}.01", ("g",)),))
        for w, p in [
            ("laugh", "noun"),
            ("laugh", "verb"),
            ("funny", "adjective"),
            ("zeal", "noun"),
            ("tear", "noun"),
            ("tear", "verb"),
            ("joy", "noun"),
            ("high five", "noun"),
            ("happy", "adjective"),
        ]
    ]
)
JOY_SEEDS = {"face", "joy", "laugh", "tear", "cry", "happy"}


def test_seed_keywords_for_tears_of_joy():
    entry = EmojiEntry("U+1F602", keywords={"face", "joy", "laugh", "tear", "cry", "happy"})
    assert seed_keywords(entry) == JOY_SEEDS
    assert seed_keywords(EmojiEntry("U+1F602")) == frozenset()
    assert seed_keywords(EmojiEntry("U+1F602", keywords=seed_keywords(entry))) == JOY_SEEDS


def test_laugh_adjective_rejected_for_invalid_pos():
    result = filter_labels(
        [("laugh", "noun", 1), ("laugh", "verb", 1), ("laugh", "adjective", 1)], JOY_SEEDS, LEX
    )
    assert result.kept == {SenseLabel("laugh", "noun", 1, "seed"), SenseLabel("laugh", "verb", 1, "seed")}
    assert [(r.word, r.pos, r.reason) for r in result.rejected] == [("laugh", "adjective", INVALID_POS)]


def test_agreed_label_kept():
    result = filter_labels([RawLabel("funny", "adjective", 2)], JOY_SEEDS, LEX)
    assert result.kept == {SenseLabel("funny", "adjective", 2, "agreed")}


def test_single_non_seed_rejected():
    result = filter_labels([("zeal", "noun", 1)], JOY_SEEDS, LEX)
    assert result.kept == frozenset()
    [rej] = result.rejected
    assert rej.reason == NOT_SEED_NOT_AGREED
    assert rej.to_record("U+1F602") == {
        "unicode": "U+1F602", "word": "zeal", "pos": "noun", "submission_count": 1, "reason": NOT_SEED_NOT_AGREED,
    }


def test_unagreed_and_invalid_reports_first_failing_check():
    result = filter_labels([("zeal", "verb", 1)], JOY_SEEDS, LEX)
    assert [r.reason for r in result.rejected] == [NOT_SEED_NOT_AGREED]


def test_duplicates_are_summed_and_normalized():
    result = filter_labels([("Zeal ", "noun", 1), ("zeal", "noun", 1)], JOY_SEEDS, LEX)
    assert result.kept == {SenseLabel("zeal", "noun", 2, "agreed")}


def test_seed_takes_precedence_over_agreement():
    result = filter_labels([("laugh", "noun", 7)], JOY_SEEDS, LEX)
    assert result.kept == {SenseLabel("laugh", "noun", 7, "seed")}


def test_multiword_label():
    result = filter_labels([("High Five", "noun", 3)], set(), LEX)
    assert result.kept == {SenseLabel("high five", "noun", 3, "agreed")}


_words = st.sampled_from(["laugh", "funny", "zeal", "tear", "joy", "happy", "cry", "high five", "meh"])
_pos = st.sampled_from(["noun", "verb", "adjective"])
_labels = st.lists(st.tuples(_words, _pos, st.integers(1, 4)), max_size=12)
_seeds = st.sets(_words, max_size=5)


def _fold(labels):
    out = {}
    for w, p, n in labels:
        out[(w, p)] = out.get((w, p), 0) + n
    return out


@given(_labels, _seeds)
def test_filter_properties(labels, seeds):
    result = filter_labels(labels, seeds, LEX)
    folded = _fold(labels)
    assert len(result.kept) + len(result.rejected) == len(folded)
    for lab in result.kept:
        assert folded[(lab.word, lab.pos)] == lab.submission_count
        assert LEX.has(lab.word, lab.pos)
        if lab.origin == "agreed":
            assert lab.submission_count >= 2 and lab.word not in seeds
        else:
            assert lab.word in seeds
    assert len({(lab.word, lab.pos) for lab in result.kept}) == len(result.kept)


@given(_labels, _seeds, _seeds)
def test_more_seeds_never_shrink_output(labels, seeds, extra):
    small = filter_labels(labels, seeds, LEX).kept
    large = filter_labels(labels, seeds | extra, LEX).kept
    assert {(lab.word, lab.pos) for lab in small} <= {(lab.word, lab.pos) for lab in large}


@given(_labels, _seeds, st.randoms())
def test_filter_ignores_input_order(labels, seeds, rnd):
    shuffled = list(labels)
    rnd.shuffle(shuffled)
    a, b = filter_labels(labels, seeds, LEX), filter_labels(shuffled, seeds, LEX)
    assert a.kept == b.kept and a.rejected == b.rejected
