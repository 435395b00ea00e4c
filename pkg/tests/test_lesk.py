import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import make_pray_lexicon
from emojinet.errors import NoSensesError, SenseLookupError
from emojinet.ingest import Lexicon, LexiconEntry, LexiconSense
from emojinet.inventory import EmojiEntry, SenseAssignment
from emojinet.lesk import (
    EmojiOccurrence,
    content_words,
    disambiguate_text,
    extract_emoji,
    gloss_words,
    lesk_rank,
    tokenize,
)

T1 = "Pray for my family 🙏 God gained an angel today."
T2 = "Hard to win, but we did it man 🙏 Lets celebrate!"

PRAY = SenseAssignment("pray", "verb", "pray.v.01", "To pray to god or a saint in worship", (), "MFS", "seed")
HIGH_FIVE = SenseAssignment("high five", "noun", "high_five.n.01", "A high five", (), "MPS", "agreed")
_PRAY_LEX = make_pray_lexicon()


@pytest.fixture
def inventory():
    entries = [
        EmojiEntry("U+1F64F", keywords={"pray", "hands"}, senses={PRAY, HIGH_FIVE}),
        EmojiEntry("U+1F602", keywords={"joy"}),
        EmojiEntry("U+1F1F7-U+1F1FA", keywords={"russia"}),
        EmojiEntry("U+1F1F7", keywords={"r"}),
        EmojiEntry("U+1F44D-U+1F3FD", keywords={"thumbs"}),
        EmojiEntry("U+1F44D", keywords={"thumbs"}),
        EmojiEntry("U+2764", keywords={"heart"}),
    ]
    return {e.unicode: e for e in entries}


def test_tokenize_and_stopwords():
    assert tokenize("Don't STOP, it's fine!") == ["dont", "stop", "its", "fine"]
    assert content_words("Pray for my family") == {"pray", "family"}
    assert content_words("to the of and") == set()


def test_gloss_word_sets(pray_lexicon):
    assert gloss_words(PRAY, pray_lexicon) == {"worship", "thanksgiving", "saint", "pray", "higher", "god", "confession"}
    assert gloss_words(HIGH_FIVE, pray_lexicon) == {
        "palm", "high", "hand", "slide", "celebrate", "raise", "person", "head", "five",
    }


def test_gloss_words_examples_flag():
    lex = Lexicon([LexiconEntry("x", "noun", (LexiconSense("x.n.01", ("to be or not",), ("a zebra walks",)),))])
    sense = SenseAssignment("x", "noun", "x.n.01", "to be or not")
    assert gloss_words(sense, lex) == {"zebra", "walks"}
    assert gloss_words(sense, lex, include_examples=False) == set()


def test_gloss_words_dangling(pray_lexicon):
    with pytest.raises(SenseLookupError):
        gloss_words(SenseAssignment("pray", "verb", "pray.v.09", "g"), pray_lexicon)


def test_extract_t2(inventory):
    [occ] = extract_emoji("we did it man 🙏", inventory)
    assert occ.unicode == "U+1F64F"
    assert occ.byte_offset == len("we did it man ".encode())
    assert not occ.unknown


def test_extract_nothing(inventory):
    assert extract_emoji("plain words only", inventory) == []
    assert extract_emoji("", inventory) == []


def test_skin_tone_stripped_when_absent(inventory):
    [occ] = extract_emoji("🙏🏽", inventory)
    assert occ.unicode == "U+1F64F"
    assert occ.matched_text == "🙏🏽"


def test_skin_tone_kept_when_present(inventory):
    assert [o.unicode for o in extract_emoji("👍🏽👍", inventory)] == ["U+1F44D-U+1F3FD", "U+1F44D"]


def test_longest_match_and_variation_selector(inventory):
    occs = extract_emoji("🇷🇺 ❤️ 🇷x", inventory)
    assert [o.unicode for o in occs] == ["U+1F1F7-U+1F1FA", "U+2764", "U+1F1F7"]
    text = "🇷🇺 ❤️ 🇷x".encode()
    for o in occs:
        assert text[o.byte_offset:].decode("utf-8").startswith(o.matched_text)


def test_unknown_emoji_flagged(inventory):
    [occ] = extract_emoji("hmm 🤔", inventory)
    assert occ.unknown and occ.unicode == "U+1F914"


def test_stray_modifier_is_not_an_emoji(inventory):
    assert [o.unicode for o in extract_emoji("️🙏", inventory)] == ["U+1F64F"]


def test_window(inventory):
    [occ] = extract_emoji("one two three 🙏 four five six", inventory, window=2)
    assert occ.surrounding_text == "two three four five"
    [occ] = extract_emoji("one two three 🙏 four five six", inventory, window=0)
    assert occ.surrounding_text == ""


def test_t1_prefers_pray(inventory, pray_lexicon):
    [occ] = extract_emoji(T1, inventory)
    result = lesk_rank(occ, inventory, pray_lexicon)
    assert result.winner.sense == PRAY
    assert result.winner.overlapping_words == {"god", "pray"}
    assert result.scores[1].overlap == 0
    assert not result.undecided


def test_t2_prefers_high_five(inventory, pray_lexicon):
    [occ] = extract_emoji(T2, inventory)
    result = lesk_rank(occ, inventory, pray_lexicon)
    assert result.winner.sense == HIGH_FIVE
    assert result.winner.overlapping_words == {"celebrate"}


def test_zero_overlap_is_undecided(inventory, pray_lexicon):
    result = lesk_rank(EmojiOccurrence("U+1F64F", 0, "nothing shared here"), inventory, pray_lexicon)
    assert result.undecided
    # tie-break order: MFS before MPS
    assert [s.sense for s in result.scores] == [PRAY, HIGH_FIVE]


def test_no_senses(inventory, pray_lexicon):
    with pytest.raises(NoSensesError) as exc:
        lesk_rank(EmojiOccurrence("U+1F602", 0, "joy"), inventory, pray_lexicon)
    assert "U+1F602" in str(exc.value)


def test_disambiguate_text(inventory, pray_lexicon):
    out = disambiguate_text(T1 + " 😂 🤔", inventory, pray_lexicon)
    assert [o["unicode"] for o in out] == ["U+1F64F", "U+1F602", "U+1F914"]
    assert out[0]["senses"][0]["sense_id"] == "pray.v.01"
    assert out[0]["senses"][0]["overlapping_words"] == ["god", "pray"]
    assert out[1]["senses"] == [] and out[1]["undecided"]
    assert out[2]["unknown"]


# --- properties -------------------------------------------------------------

_vocab = ["god", "pray", "celebrate", "palm", "saint", "angel", "win", "family", "five", "the", "and", "hand"]
_context = st.lists(st.sampled_from(_vocab), max_size=12)


def _brute(words, lexicon):
    ctx = {w for w in words if w not in {"the", "and"}}
    scores = {}
    for sense in (PRAY, HIGH_FIVE):
        gloss = set()
        for g in lexicon.sense(sense.word, sense.pos, sense.sense_id).glosses:
            gloss |= content_words(g)
        scores[sense] = len(ctx & gloss)
    return scores


@given(_context, st.randoms())
def test_lesk_matches_bruteforce_and_is_order_free(words, rnd):
    lex = _PRAY_LEX
    inv = {"U+1F64F": EmojiEntry("U+1F64F", senses={PRAY, HIGH_FIVE})}
    result = lesk_rank(EmojiOccurrence("U+1F64F", 0, " ".join(words)), inv, lex)
    expected = _brute(words, lex)
    assert {s.sense: s.overlap for s in result.scores} == expected
    assert result.winner.overlap == max(expected.values())
    shuffled = words * 2
    rnd.shuffle(shuffled)
    again = lesk_rank(EmojiOccurrence("U+1F64F", 0, " ".join(shuffled)), inv, lex)
    assert again == result


@given(_context, _context)
def test_more_context_never_lowers_overlap(words, extra):
    inv = {"U+1F64F": EmojiEntry("U+1F64F", senses={PRAY, HIGH_FIVE})}
    small = lesk_rank(EmojiOccurrence("U+1F64F", 0, " ".join(words)), inv, _PRAY_LEX)
    large = lesk_rank(EmojiOccurrence("U+1F64F", 0, " ".join(words + extra)), inv, _PRAY_LEX)
    big = {s.sense: s.overlap for s in large.scores}
    assert all(big[s.sense] >= s.overlap for s in small.scores)


_pieces = st.lists(
    st.sampled_from(["a", "é", " ", "🙏", "🏽", "️", "🇷", "🇺", "❤", "👍", "😂", "中", "🤔", "‍"]), max_size=15
)


@given(_pieces)
def test_offsets_land_on_boundaries(pieces):
    text = "".join(pieces)
    inv = ["U+1F64F", "U+1F1F7-U+1F1FA", "U+1F1F7", "U+2764", "U+1F44D", "U+1F602"]
    raw = text.encode("utf-8")
    last = -1
    for occ in extract_emoji(text, inv):
        assert occ.byte_offset > last
        last = occ.byte_offset
        assert raw[occ.byte_offset:].decode("utf-8").startswith(occ.matched_text)
        assert occ.matched_text
