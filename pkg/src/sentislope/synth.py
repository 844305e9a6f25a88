"""Deterministic synthetic demo corpus.

The generator assembles short messages from a neutral filler vocabulary
(including stop words, numerals, hashtags, mentions, and URLs so the
normalizer has work to do) and injects sentiment-bearing words from the
bundled fixture lexicons at phase-dependent rates:

    phase 1 (first third):  sentiment prob 0.12 per slot, 65% positive
    phase 2 (middle third): sentiment prob 0.22 per slot, 35% positive
    phase 3 (last third):   sentiment prob 0.10 per slot, 50% positive

Emotion-only words (no polarity tag) are injected at 0.04 per slot in
every phase, and every 97th record is empty. The stdlib Mersenne
Twister with a fixed seed makes output a pure function of (seed, n).
"""

from __future__ import annotations

import json
import random
from datetime import datetime, timedelta, timezone
from typing import Iterable

DEFAULT_SEED = 7
DEFAULT_RECORDS = 1000

FILLER = [
    "the", "and", "is", "a", "of", "to", "in", "we", "you", "they",
    "people", "city", "street", "today", "day", "news", "watch", "live",
    "video", "phone", "office", "work", "home", "time", "year", "state",
    "states", "country", "nation", "world", "group", "crowd", "police",
    "media", "report", "story", "morning", "evening", "building", "house",
    "road", "corner", "line", "door", "window", "update", "message",
    "isn't", "don't", "can't", "it's", "that's", "50", "100", "2nd",
]

HASHTAGS = ["#news", "#update", "#live", "#breaking"]
MENTIONS = ["@reporter", "@cityhall", "@newsdesk"]
URLS = ["https://example.com/a", "http://example.org/watch?v=1"]
PUNCT = ["!", ".", "?", "!!", "..."]

POSITIVE_WORDS = [
    "love", "great", "wonderful", "happy", "beautiful", "win", "hope",
    "justice", "courage", "admire", "peaceful", "congratulations",
    "strong", "faith", "victory", "proud", "celebrate", "friend",
    "honest", "fine", "calm", "safe",
]
NEGATIVE_WORDS = [
    "hate", "attack", "riot", "afraid", "terror", "bomb", "panic",
    "corrupt", "sad", "loss", "cry", "violence", "coup", "destruction",
    "angry", "evil", "fraud", "brutality", "gunshot", "evacuate",
    "lousy", "worried",
]
EMOTION_ONLY_WORDS = ["sudden", "unexpected", "waiting", "shock", "mourn"]

PHASE_RATES = (
    (0.12, 0.65),
    (0.22, 0.35),
    (0.10, 0.50),
)
EMOTION_RATE = 0.04
EMPTY_EVERY = 97


def _record_text(rng: random.Random, sent_rate: float, pos_share: float) -> str:
    n_slots = rng.randint(5, 16)
    words = []
    for _ in range(n_slots):
        roll = rng.random()
        if roll < sent_rate:
            pool = POSITIVE_WORDS if rng.random() < pos_share else NEGATIVE_WORDS
            words.append(rng.choice(pool))
        elif roll < sent_rate + EMOTION_RATE:
            words.append(rng.choice(EMOTION_ONLY_WORDS))
        else:
            word = rng.choice(FILLER)
            decorate = rng.random()
            if decorate < 0.05:
                word = word.upper()
            elif decorate < 0.12:
                word = word.capitalize()
            words.append(word)
    if rng.random() < 0.08:
        words.append(rng.choice(HASHTAGS))
    if rng.random() < 0.06:
        words.insert(0, rng.choice(MENTIONS))
    if rng.random() < 0.05:
        words.append(rng.choice(URLS))
    text = " ".join(words)
    if rng.random() < 0.4:
        text += rng.choice(PUNCT)
    return text


def generate_texts(n: int = DEFAULT_RECORDS, seed: int = DEFAULT_SEED) -> list[str]:
    """The demo corpus texts: n short messages in three phases."""
    rng = random.Random(seed)
    texts = []
    for i in range(1, n + 1):
        phase = min(2, 3 * (i - 1) // n)
        rate, pos_share = PHASE_RATES[phase]
        if i % EMPTY_EVERY == 0:
            texts.append("")
        else:
            texts.append(_record_text(rng, rate, pos_share))
    return texts


def _timestamps(n: int) -> Iterable[str]:
    # 30-second cadence from an arbitrary fixed instant.
    base = datetime(2023, 5, 1, 9, 0, 0, tzinfo=timezone.utc)
    for i in range(n):
        yield (base + timedelta(seconds=30 * i)).isoformat()


def corpus_jsonl(n: int = DEFAULT_RECORDS, seed: int = DEFAULT_SEED) -> str:
    """The demo corpus as JSONL text with text and timestamp keys."""
    texts = generate_texts(n, seed)
    lines = [
        json.dumps({"text": text, "timestamp": ts}, ensure_ascii=False)
        for text, ts in zip(texts, _timestamps(len(texts)))
    ]
    return "\n".join(lines) + "\n"
