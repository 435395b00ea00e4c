#!/usr/bin/env python3
"""Regenerate the fixtures under fixtures/.

fixtures/align/  50 synthetic icon families; 3 renderings each form the
                 example set, a 4th held-out rendering is the test image.
fixtures/build/  ~30 emoji worth of resource dumps, lexicon, annotated
                 corpus and icon renderings for an end-to-end build.

Output is deterministic for a given numpy/Pillow version. Run from the repo
root:  python scripts/make_fixtures.py
"""

from __future__ import annotations

import json
import shutil
import sys
from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw

ROOT = Path(__file__).resolve().parent.parent / "fixtures"
PLATFORMS = ("apple", "google", "twitter")


# --- icon drawing ---------------------------------------------------------


def family_params(rng: np.random.Generator) -> dict:
    face = tuple(int(c) for c in rng.integers(0, 256, 3))
    features = []
    for _ in range(int(rng.integers(3, 6))):
        x0, y0 = rng.uniform(0.05, 0.65, 2)
        w, h = rng.uniform(0.15, 0.35, 2)
        features.append(
            {
                "shape": str(rng.choice(["ellipse", "rect"])),
                "box": (float(x0), float(y0), float(x0 + w), float(y0 + h)),
                "color": tuple(int(c) for c in rng.integers(0, 256, 3)),
            }
        )
    return {"face": face, "features": features, "face_shape": str(rng.choice(["ellipse", "rect"]))}


def render(params: dict, size: int, rng: np.random.Generator, jitter: float = 6.0, shift: float = 0.015) -> Image.Image:
    """Draw one platform-style rendering on a transparent canvas."""
    img = Image.new("RGBA", (size, size), (0, 0, 0, 0))
    draw = ImageDraw.Draw(img)

    def col(c):
        return tuple(int(np.clip(v + rng.normal(0, jitter), 0, 255)) for v in c) + (255,)

    def box(b):
        dx, dy = rng.uniform(-shift, shift, 2)
        return [
            (b[0] + dx) * size,
            (b[1] + dy) * size,
            (b[2] + dx) * size,
            (b[3] + dy) * size,
        ]

    pad = 0.04
    face_box = box((pad, pad, 1 - pad, 1 - pad))
    getattr(draw, "ellipse" if params["face_shape"] == "ellipse" else "rectangle")(face_box, fill=col(params["face"]))
    for f in params["features"]:
        getattr(draw, "ellipse" if f["shape"] == "ellipse" else "rectangle")(box(f["box"]), fill=col(f["color"]))
    return img


def families(n: int, seed: int) -> list[dict]:
    rng = np.random.default_rng(seed)
    return [family_params(rng) for _ in range(n)]


# --- alignment fixture ----------------------------------------------------


def make_align(out: Path, n_families: int = 50) -> None:
    fams = families(n_families, seed=20161114)
    rng = np.random.default_rng(7)
    examples, tests = [], []
    (out / "examples").mkdir(parents=True)
    (out / "tests").mkdir(parents=True)
    for i, params in enumerate(fams):
        owner = f"U+{0xE000 + i:04X}"
        for platform, size in zip(PLATFORMS, (72, 144, 160)):
            rel = f"examples/fam{i:02d}_{platform}.png"
            render(params, size, rng).save(out / rel)
            examples.append({"path": rel, "owner": owner})
        rel = f"tests/fam{i:02d}.png"
        render(params, 120, rng).save(out / rel)
        tests.append({"path": rel, "owner": owner})
    (out / "manifest.json").write_text(
        json.dumps({"examples": examples, "tests": tests}, indent=1) + "\n", encoding="utf-8"
    )


# --- build fixture --------------------------------------------------------

# unicode, unicode-list keywords, iEmoji keywords, emojipedia (shortcode, description, related, categories) or None,
# emoji-dictionary label lists (one list per dictionary image; [] means no dictionary record)
EMOJI = [
    ("U+1F602", "face joy laugh tear", "tear cry joy happy",
     ("face_with_tears_of_joy", "A laughing face with big tears of joy.", ["U+1F923", "U+1F62D"], ["Smileys & People"]),
     [[("laugh", "noun", 6), ("laugh", "verb", 4), ("laugh", "adjective", 2), ("funny", "adjective", 3), ("zeal", "noun", 1)]]),
    ("U+1F64F", "hand pray bow please thanks", "pray hope",
     ("folded_hands", "Two hands pressed together.", ["U+1F64C", "U+1F44F"], ["Smileys & People"]),
     [[("pray", "verb", 5), ("high five", "noun", 3), ("pray", "noun", 1)]]),
    ("U+1F52B", "gun handgun pistol revolver tool weapon", "gun shoot kill",
     ("pistol", "A water pistol or handgun.", ["U+1F4A3"], ["Objects"]),
     [[("gun", "noun", 5), ("shoot", "verb", 4), ("kill", "verb", 2), ("anger", "noun", 2), ("weapon", "noun", 1)]]),
    ("U+1F4B0", "bag dollar money moneybag", "money rich cash",
     ("money_bag", "A bag of money.", ["U+1F4B5"], ["Objects"]),
     [[("money", "noun", 6), ("expensive", "adjective", 2), ("rich", "adjective", 3), ("work", "verb", 1), ("cash", "noun", 1)]]),
    ("U+1F346", "aubergine eggplant vegetable", "eggplant",
     ("eggplant", "An eggplant, or aubergine.", [], ["Food & Drink"]),
     [[("eggplant", "noun", 3), ("vegetable", "noun", 2)]]),
    ("U+1F60A", "blush eye face smile", "smile happy",
     ("smiling_face_with_smiling_eyes", "A smiling face with smiling eyes.", ["U+1F602"], ["Smileys & People"]),
     [[("smile", "noun", 3), ("smile", "verb", 2), ("glad", "adjective", 2), ("blush", "verb", 1)]]),
    ("U+2764 U+FE0F", "heart", "love heart",
     ("red_heart", "A classic red love heart.", ["U+1F494", "U+1F60D"], ["Symbols"]),
     [[("love", "noun", 5), ("love", "verb", 4), ("heart", "noun", 3)]]),
    ("U+1F1F7 U+1F1FA", "flag russia", "flag",
     ("flag_russia", "The flag of Russia.", ["U+1F1F8-U+1F1EE"], ["Flags"]),
     [[("russia", "noun", 2), ("flag", "noun", 1)]]),
    ("U+1F1F8 U+1F1EE", "flag slovenia", "",
     ("flag_slovenia", "The flag of Slovenia.", ["U+1F1F7-U+1F1FA"], ["Flags"]),
     []),
    ("U+1F550", "00 1 1:00 clock o’clock one", "clock time",
     None,
     [[("time", "noun", 2), ("clock", "noun", 1)]]),
    ("U+1F551", "00 2 2:00 clock o’clock two", "clock",
     None,
     []),
    ("U+1F44D", "+1 hand thumb up", "like approve",
     ("thumbs_up", "A thumbs-up gesture.", ["U+1F44F"], ["Smileys & People"]),
     [[("approve", "verb", 3), ("like", "verb", 2), ("good", "adjective", 2), ("thumb", "noun", 1)]]),
    ("U+1F389", "celebration party popper tada", "party",
     ("party_popper", "A party popper used at celebrations.", ["U+1F382"], ["Activity"]),
     [[("party", "noun", 4), ("celebrate", "verb", 3), ("celebration", "noun", 2)]]),
    ("U+1F525", "fire flame tool", "hot lit",
     ("fire", "A small flame.", [], ["Travel & Places"]),
     [[("fire", "noun", 3), ("hot", "adjective", 2), ("lit", "adjective", 1), ("awesome", "adjective", 1)],
      [("lit", "adjective", 1), ("fire", "verb", 1), ("awesome", "adjective", 1)]]),
    ("U+1F62D", "cry face sad sob tear", "cry sad",
     ("loudly_crying_face", "A face crying a stream of tears.", ["U+1F602"], ["Smileys & People"]),
     [[("cry", "verb", 4), ("sad", "adjective", 3), ("sob", "verb", 2), ("tear", "noun", 2)]]),
    ("U+1F60D", "eye face heart love smile", "love",
     ("smiling_face_with_heart_eyes", "A smiling face with heart-shaped eyes.", ["U+2764"], ["Smileys & People"]),
     [[("love", "noun", 3), ("love", "verb", 2), ("crush", "noun", 2), ("adore", "verb", 2)]]),
    ("U+1F4AF", "100 full hundred score", "perfect",
     ("hundred_points", "A red 100, for a perfect score.", [], ["Symbols"]),
     [[("hundred", "noun", 1), ("perfect", "adjective", 3), ("score", "noun", 2)]]),
    ("U+1F64C", "body celebration gesture hand hooray raised", "praise",
     ("raising_hands", "Two hands raised in celebration.", ["U+1F64F"], ["Smileys & People"]),
     [[("celebrate", "verb", 2), ("praise", "verb", 3), ("hooray", "noun", 1)]]),
    ("U+1F44F", "clap hand", "clap applause",
     None,
     [[("clap", "verb", 3), ("applause", "noun", 2)]]),
    ("U+1F60E", "bright cool eye eyewear face glasses smile sun sunglasses weather", "cool",
     ("smiling_face_with_sunglasses", "A smiling face wearing sunglasses.", [], ["Smileys & People"]),
     [[("cool", "adjective", 4), ("sun", "noun", 1)]]),
    ("U+2600 U+FE0F", "bright rays sunny sun weather", "sun",
     ("sun", "A bright sun with rays.", ["U+1F319"], ["Travel & Places"]),
     [[("sun", "noun", 3), ("sunny", "adjective", 2), ("weather", "noun", 1)]]),
    ("U+1F319", "crescent moon space", "moon night",
     ("crescent_moon", "A crescent moon.", ["U+2600"], ["Travel & Places"]),
     [[("moon", "noun", 2), ("night", "noun", 2)]]),
    ("U+2B50", "star", "star",
     ("star", "A yellow star.", [], ["Travel & Places"]),
     [[("star", "noun", 3)]]),
    ("U+1F355", "cheese pizza slice", "pizza",
     ("pizza", "A slice of pepperoni pizza.", [], ["Food & Drink"]),
     [[("pizza", "noun", 4), ("food", "noun", 2)]]),
    ("U+1F37A", "bar beer drink mug", "beer",
     ("beer_mug", "A mug of beer.", [], ["Food & Drink"]),
     [[("beer", "noun", 4), ("drink", "verb", 3), ("drink", "noun", 2)]]),
    ("U+1F382", "birthday cake celebration dessert pastry sweet", "birthday",
     None,
     [[("birthday", "noun", 3), ("cake", "noun", 2)]]),
    ("U+1F436", "dog face pet", "dog",
     ("dog_face", "A friendly dog face.", [], ["Animals & Nature"]),
     [[("dog", "noun", 3), ("pet", "noun", 1), ("puppy", "noun", 2)]]),
    ("U+1F697", "car", "car",
     ("automobile", "A red car.", [], ["Travel & Places"]),
     [[("car", "noun", 3), ("drive", "verb", 2)]]),
    ("U+1F494", "break broken heart", "heartbreak",
     ("broken_heart", "A red heart broken in two.", ["U+2764"], ["Symbols"]),
     [[("heartbreak", "noun", 2), ("sad", "adjective", 2), ("broken", "adjective", 1)]]),
    ("U+1F468 U+200D U+1F469 U+200D U+1F467", "family man woman girl", "family",
     None,
     [[("family", "noun", 3)]]),
    ("U+1F44B", "hand wave waving", "hello",
     ("waving_hand", "A waving hand.", [], ["Smileys & People"]),
     [[("wave", "verb", 3), ("hello", "noun", 2), ("goodbye", "noun", 2)]]),
]

EXTRA_EMOJIPEDIA = [("U+1F923", "rolling_on_the_floor_laughing", "A face rolling with laughter.", ["U+1F602"], ["Smileys & People"])]
EXTRA_IEMOJI = [("U+1F914", "think hmm")]

# (lemma, pos) -> [(sense_id, [glosses], [examples])]
LEXICON = {
    ("laugh", "noun"): [
        ("laugh.n.01", ["the sound of laughing", "a vocal expression of amusement"], ["his laugh filled the room"]),
        ("laugh.n.02", ["a facial expression of amusement"], []),
        ("laugh.n.03", ["a humorous anecdote or remark"], ["he told a laugh at dinner"]),
        ("laugh.n.04", ["activity that is diverting and amusing"], []),
        ("laugh.n.05", ["a person or thing that is ridiculous"], []),
        ("laugh.n.06", ["an act of mockery"], []),
    ],
    ("laugh", "verb"): [
        ("laugh.v.01", ["produce laughter", "show mirth by laughing"], ["the audience laughed"]),
        ("laugh.v.02", ["treat with ridicule"], []),
    ],
    ("funny", "adjective"): [
        ("funny.a.01", ["arousing or provoking laughter", "comical or amusing"], ["a funny story"]),
        ("funny.a.02", ["strange or odd"], []),
    ],
    ("pray", "verb"): [
        ("pray.v.01", ["To pray to god or a saint in worship", "To a higher god in thanksgiving and confession"], []),
        ("pray.v.02", ["call upon in supplication; entreat"], []),
    ],
    ("high five", "noun"): [
        ("high_five.n.01", [
            "A high five is to raise a hand above the head",
            "To slide a palm against the palm of a person",
            "To celebrate with a person",
        ], []),
        ("high_five.n.02", ["a score of fifteen in a card game"], []),
    ],
    ("gun", "noun"): [
        ("gun.n.01", ["a weapon that discharges a missile", "a firearm"], []),
        ("gun.n.02", ["a person who shoots a gun"], []),
    ],
    ("shoot", "verb"): [("shoot.v.01", ["hit with a missile from a weapon"], []), ("shoot.v.02", ["make a film or photograph"], [])],
    ("kill", "verb"): [("kill.v.01", ["cause to die", "put to death"], [])],
    ("anger", "noun"): [("anger.n.01", ["a strong emotion; a feeling of antagonism"], [])],
    ("weapon", "noun"): [("weapon.n.01", ["any instrument used in fighting or hunting"], [])],
    ("money", "noun"): [
        ("money.n.01", ["the most common medium of exchange"], []),
        ("money.n.02", ["wealth reckoned in terms of money", "riches"], []),
        ("money.n.03", ["the official currency issued by a government"], []),
    ],
    ("expensive", "adjective"): [("expensive.a.01", ["high in price or charging high prices"], [])],
    ("rich", "adjective"): [
        ("rich.a.01", ["possessing material wealth", "having money"], []),
        ("rich.a.02", ["having an abundant supply"], []),
    ],
    ("cash", "noun"): [("cash.n.01", ["money in the form of bills or coins"], [])],
    ("work", "verb"): [("work.v.01", ["exert oneself by doing mental or physical work"], [])],
    ("eggplant", "noun"): [("eggplant.n.01", ["egg-shaped vegetable having a shiny skin"], [])],
    ("vegetable", "noun"): [("vegetable.n.01", ["edible seeds or roots or stems of plants"], [])],
    ("smile", "noun"): [("smile.n.01", ["a facial expression of pleasure"], [])],
    ("smile", "verb"): [("smile.v.01", ["change one's facial expression by spreading the lips"], [])],
    ("glad", "adjective"): [("glad.a.01", ["showing pleasure or satisfaction"], [])],
    ("blush", "verb"): [("blush.v.01", ["turn red, as if in embarrassment or shame"], [])],
    ("love", "noun"): [
        ("love.n.01", ["a strong positive emotion of regard and affection"], ["his love for his work"]),
        ("love.n.02", ["a beloved person; used as terms of endearment"], []),
        ("love.n.03", ["a score of zero in tennis"], []),
    ],
    ("love", "verb"): [("love.v.01", ["have a great affection or liking for"], []), ("love.v.02", ["get pleasure from"], [])],
    ("heart", "noun"): [
        ("heart.n.01", ["the locus of feelings and intuitions", "the seat of emotion"], []),
        ("heart.n.02", ["the hollow muscular organ that pumps blood"], []),
    ],
    ("russia", "noun"): [("russia.n.01", ["a federation in northern Asia and eastern Europe"], [])],
    ("flag", "noun"): [("flag.n.01", ["emblem usually consisting of a rectangular piece of cloth"], [])],
    ("time", "noun"): [
        ("time.n.01", ["an instance or single occasion for some event"], []),
        ("time.n.02", ["a reading of a point in time as given by a clock"], []),
    ],
    ("clock", "noun"): [("clock.n.01", ["a timepiece that shows the time of day"], [])],
    ("approve", "verb"): [("approve.v.01", ["give sanction to"], []), ("approve.v.02", ["judge to be right or commendable"], [])],
    ("like", "verb"): [("like.v.01", ["be fond of"], []), ("like.v.02", ["find enjoyable or agreeable"], [])],
    ("good", "adjective"): [("good.a.01", ["having desirable or positive qualities"], [])],
    ("thumb", "noun"): [("thumb.n.01", ["the thick short innermost digit of the hand"], [])],
    ("party", "noun"): [
        ("party.n.01", ["a group of people gathered together for pleasure", "a social gathering"], []),
        ("party.n.02", ["an organization to gain political power"], []),
    ],
    ("celebrate", "verb"): [("celebrate.v.01", ["have a celebration"], []), ("celebrate.v.02", ["assign great social importance to"], [])],
    ("celebration", "noun"): [("celebration.n.01", ["a joyful occasion for special festivities"], [])],
    ("fire", "noun"): [
        ("fire.n.01", ["the event of something burning", "combustion"], []),
        ("fire.n.02", ["the act of firing weapons"], []),
    ],
    ("fire", "verb"): [("fire.v.01", ["terminate the employment of"], []), ("fire.v.02", ["cause to go off"], [])],
    ("hot", "adjective"): [("hot.a.01", ["used of physical heat"], []), ("hot.a.02", ["very popular or exciting"], [])],
    ("lit", "adjective"): [("lit.a.01", ["provided with artificial light"], []), ("lit.a.02", ["set afire or burning"], [])],
    ("awesome", "adjective"): [("awesome.a.01", ["inspiring awe or admiration or wonder"], [])],
    ("cry", "verb"): [("cry.v.01", ["shed tears because of sadness"], []), ("cry.v.02", ["utter a sudden loud cry"], [])],
    ("sad", "adjective"): [("sad.a.01", ["experiencing sorrow or unhappiness"], []), ("sad.a.02", ["bad; unfortunate"], [])],
    ("sob", "verb"): [("sob.v.01", ["weep convulsively"], [])],
    ("tear", "noun"): [("tear.n.01", ["a drop of the clear salty saline solution secreted by the eye"], []), ("tear.n.02", ["an opening made forcibly as by pulling apart"], [])],
    ("crush", "noun"): [
        ("crush.n.01", ["temporary love of an adolescent", "an infatuation"], []),
        ("crush.n.02", ["a dense crowd of people", "a throng"], []),
    ],
    ("adore", "verb"): [("adore.v.01", ["love intensely"], [])],
    ("hundred", "noun"): [("hundred.n.01", ["ten 10s"], [])],
    ("perfect", "adjective"): [("perfect.a.01", ["being complete of its kind and without defect"], [])],
    ("score", "noun"): [("score.n.01", ["a number that expresses accomplishment in a game"], []), ("score.n.02", ["a written form of a musical composition"], [])],
    ("praise", "verb"): [("praise.v.01", ["express approval of"], [])],
    ("hooray", "interjection"): [("hooray.r.01", ["an exclamation of joy"], [])],
    ("clap", "verb"): [("clap.v.01", ["clap one's hands for applause"], [])],
    ("applause", "noun"): [("applause.n.01", ["a demonstration of approval by clapping the hands"], [])],
    ("cool", "adjective"): [("cool.a.01", ["neither warm nor very cold"], []), ("cool.a.02", ["fashionable and attractive", "great"], [])],
    ("sun", "noun"): [("sun.n.01", ["the star that is the source of light and heat for the planets"], []), ("sun.n.02", ["the rays of the sun"], [])],
    ("sunny", "adjective"): [("sunny.a.01", ["bright with sunlight"], [])],
    ("weather", "noun"): [("weather.n.01", ["the atmospheric conditions"], [])],
    ("moon", "noun"): [("moon.n.01", ["the natural satellite of the Earth"], [])],
    ("night", "noun"): [("night.n.01", ["the time after sunset and before sunrise"], [])],
    ("star", "noun"): [("star.n.01", ["a celestial body of hot gases"], []), ("star.n.02", ["someone who is dazzlingly skilled"], [])],
    ("pizza", "noun"): [("pizza.n.01", ["Italian open pie made of thin bread dough"], [])],
    ("food", "noun"): [("food.n.01", ["any substance that can be metabolized by an animal"], [])],
    ("beer", "noun"): [("beer.n.01", ["a general name for alcoholic beverages made by fermenting a cereal"], [])],
    ("drink", "verb"): [("drink.v.01", ["take in liquids"], []), ("drink.v.02", ["consume alcohol"], [])],
    ("drink", "noun"): [("drink.n.01", ["a single serving of a beverage"], []), ("drink.n.02", ["the act of drinking"], [])],
    ("birthday", "noun"): [("birthday.n.01", ["an anniversary of the day on which a person was born"], [])],
    ("cake", "noun"): [("cake.n.01", ["baked goods made from a sweet dough"], [])],
    ("dog", "noun"): [("dog.n.01", ["a member of the genus Canis"], []), ("dog.n.02", ["a dull unattractive unpleasant girl or woman"], [])],
    ("pet", "noun"): [("pet.n.01", ["a domesticated animal kept for companionship"], [])],
    ("puppy", "noun"): [("puppy.n.01", ["a young dog"], [])],
    ("car", "noun"): [("car.n.01", ["a motor vehicle with four wheels"], [])],
    ("drive", "verb"): [("drive.v.01", ["operate or control a vehicle"], [])],
    ("heartbreak", "noun"): [("heartbreak.n.01", ["intense sorrow caused by loss of a loved one"], [])],
    ("broken", "adjective"): [("broken.a.01", ["physically and forcibly separated into pieces"], [])],
    ("family", "noun"): [("family.n.01", ["a social unit living together"], []), ("family.n.02", ["primary social group; parents and children"], [])],
    ("wave", "verb"): [("wave.v.01", ["signal with the hands"], [])],
    ("hello", "noun"): [("hello.n.01", ["an expression of greeting"], [])],
    ("goodbye", "noun"): [("goodbye.n.01", ["a farewell remark"], [])],
    ("bank", "noun"): [("bank.n.01", ["sloping land beside a body of water"], []), ("bank.n.02", ["a financial institution"], [])],
}

# (lemma, pos, sense_id, count)
CORPUS = [
    ("laugh", "noun", "laugh.n.01", 3), ("laugh", "noun", "laugh.n.03", 1),
    ("laugh", "verb", "laugh.v.01", 2),
    ("pray", "verb", "pray.v.01", 4), ("pray", "verb", "pray.v.02", 1),
    ("gun", "noun", "gun.n.01", 2),
    ("shoot", "verb", "shoot.v.02", 2), ("shoot", "verb", "shoot.v.01", 1),
    ("kill", "verb", "kill.v.01", 3),
    ("money", "noun", "money.n.01", 5), ("money", "noun", "money.n.02", 2),
    ("rich", "adjective", "rich.a.02", 1),
    ("smile", "noun", "smile.n.01", 2),
    ("love", "noun", "love.n.01", 4), ("love", "noun", "love.n.02", 2),
    ("love", "verb", "love.v.01", 3),
    ("heart", "noun", "heart.n.02", 2), ("heart", "noun", "heart.n.01", 2),
    ("time", "noun", "time.n.01", 2), ("time", "noun", "time.n.02", 2),
    ("like", "verb", "like.v.02", 3),
    ("good", "adjective", "good.a.01", 6),
    ("party", "noun", "party.n.01", 2), ("party", "noun", "party.n.02", 3),
    ("celebrate", "verb", "celebrate.v.01", 1),
    ("fire", "noun", "fire.n.01", 2),
    ("hot", "adjective", "hot.a.01", 2),
    ("cry", "verb", "cry.v.01", 2),
    ("sad", "adjective", "sad.a.01", 3),
    ("score", "noun", "score.n.01", 1),
    ("cool", "adjective", "cool.a.01", 1), ("cool", "adjective", "cool.a.02", 1),
    ("sun", "noun", "sun.n.01", 2),
    ("night", "noun", "night.n.01", 1),
    ("star", "noun", "star.n.01", 1),
    ("food", "noun", "food.n.01", 3),
    ("drink", "verb", "drink.v.01", 2),
    ("drink", "noun", "drink.n.01", 1),
    ("dog", "noun", "dog.n.01", 2),
    ("car", "noun", "car.n.01", 4),
    ("drive", "verb", "drive.v.01", 2),
    ("family", "noun", "family.n.02", 2),
    ("bank", "noun", "bank.n.02", 3), ("bank", "noun", "bank.n.01", 1),
    ("wave", "verb", "wave.v.02", 1),  # sense id missing from the lexicon; surfaces in the corpus lint
]


def _write_jsonl(path: Path, records) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for r in records:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")


def _slug(code: str) -> str:
    return code.replace("U+", "").replace(" ", "_").lower()


def make_build(out: Path) -> None:
    img_dir = out / "images"
    (img_dir / "unicode").mkdir(parents=True)
    (img_dir / "dictionary").mkdir(parents=True)
    fams = families(len(EMOJI), seed=1791)
    # the two clock faces share colors and differ only in the hand feature
    fams[10] = {**fams[9], "features": fams[9]["features"][:-1] + [
        {**fams[9]["features"][-1], "box": (0.55, 0.2, 0.75, 0.5)}]}
    rng = np.random.default_rng(1074)

    unicode_list, emojipedia, iemoji, dictionary, truth = [], [], [], [], {}
    image_counter = 0
    for (code, kw_u, kw_ie, pedia, label_lists), params in zip(EMOJI, fams):
        slug = _slug(code)
        images = []
        for platform, size in zip(PLATFORMS, (72, 136, 160)):
            rel = f"unicode/{slug}_{platform}.png"
            render(params, size, rng).save(img_dir / rel)
            images.append({"platform": platform, "path": rel})
        unicode_list.append({"unicode": code, "keywords": kw_u.split(), "images": images})
        if kw_ie:
            iemoji.append({"unicode": code, "keywords": kw_ie.split(), "description": "(ignored)"})
        if pedia:
            shortcode, desc, related, cats = pedia
            emojipedia.append(
                {"unicode": code, "shortcode": shortcode, "description": desc, "related": related, "categories": cats}
            )
        for labels in label_lists:
            image_counter += 1
            rel = f"dictionary/ed_{image_counter:03d}.png"
            render(params, 110, rng).save(img_dir / rel)
            dictionary.append(
                {
                    "image_path": rel,
                    "sense_labels": [{"word": w, "pos": p, "submission_count": c} for w, p, c in labels],
                }
            )
            truth[rel] = code
    for code, shortcode, desc, related, cats in EXTRA_EMOJIPEDIA:
        emojipedia.append({"unicode": code, "shortcode": shortcode, "description": desc, "related": related, "categories": cats})
    for code, kws in EXTRA_IEMOJI:
        iemoji.append({"unicode": code, "keywords": kws.split()})

    # dictionary records are shuffled so file order carries no hint of the owner
    order = np.random.default_rng(5).permutation(len(dictionary))
    dictionary = [dictionary[i] for i in order]

    lexicon = [
        {"lemma": lemma, "pos": pos, "senses": [{"sense_id": s, "glosses": g, "examples": x} for s, g, x in senses]}
        for (lemma, pos), senses in LEXICON.items()
    ]
    corpus = []
    for lemma, pos, sid, n in CORPUS:
        for k in range(n):
            surface = lemma if k % 2 == 0 else lemma.capitalize()
            corpus.append({"surface": surface, "lemma": lemma, "pos": pos, "sense_id": sid})
    corpus = [corpus[i] for i in np.random.default_rng(9).permutation(len(corpus))]

    _write_jsonl(out / "unicode_list.jsonl", unicode_list)
    _write_jsonl(out / "emojipedia.jsonl", emojipedia)
    _write_jsonl(out / "iemoji.jsonl", iemoji)
    _write_jsonl(out / "emoji_dictionary.jsonl", dictionary)
    _write_jsonl(out / "lexicon.jsonl", lexicon)
    _write_jsonl(out / "corpus.jsonl", corpus)
    (out / "truth.json").write_text(json.dumps(truth, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    (out / "empty.jsonl").write_text("", encoding="utf-8")


def main(argv=None) -> int:
    for sub, fn in (("align", make_align), ("build", make_build)):
        target = ROOT / sub
        if target.exists():
            shutil.rmtree(target)
        target.mkdir(parents=True)
        fn(target)
        print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
