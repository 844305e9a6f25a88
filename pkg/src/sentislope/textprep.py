"""Tidy tokenization: one lower-case word per token, tied to its record.

normalize() is total and idempotent. Filtering never reorders tokens and
never rewrites words, so every token stays traceable to (record_id,
position) in its source record.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .corpus import TextRecord

DEDUPE_SCOPES = ("per_record", "global")

_URL_RE = re.compile(r"\b[a-z][a-z0-9+.-]*://\S+")
_MENTION_RE = re.compile(r"@\w+")
_NON_WORD_RE = re.compile(r"[^\w']+")
_INNER_APOSTROPHE_RE = re.compile(r"(?<=\w)'(?=\w)")


@dataclass(frozen=True, slots=True)
class Token:
    record_id: int
    position: int
    word: str


@dataclass(frozen=True)
class StopList:
    words: frozenset[str]
    provenance: str  # "bundled" | "user file" | "inline"

    def __contains__(self, word: str) -> bool:
        return word in self.words


def normalize(text: str) -> str:
    """Lower-case and strip a raw string down to space-separated words.

    URLs (anything shaped like scheme://...) and @-mentions are removed
    outright; `#` marks are stripped but the tag word kept. Characters
    that are neither letters, digits, nor intra-word apostrophes become
    spaces, then apostrophes are dropped ("isn't" -> "isnt"). Consecutive
    spaces collapse. Total function: any input, including empty, is fine.
    """
    s = text.lower()
    s = s.replace("’", "'")
    s = _URL_RE.sub(" ", s)
    s = _MENTION_RE.sub(" ", s)
    s = _NON_WORD_RE.sub(" ", s)
    s = s.replace("_", " ")
    s = _INNER_APOSTROPHE_RE.sub("", s)
    s = s.replace("'", " ")
    return " ".join(s.split())


def tokenize(record: TextRecord) -> list[Token]:
    """Split the normalized text into tokens with positions 1..m."""
    words = normalize(record.text).split()
    return [Token(record.id, pos, word) for pos, word in enumerate(words, start=1)]


def tokenize_corpus(records: Iterable[TextRecord]) -> list[Token]:
    tokens: list[Token] = []
    for record in records:
        tokens.extend(tokenize(record))
    return tokens


def remove_stopwords(
    tokens: list[Token], stoplist: StopList, custom: frozenset[str] = frozenset()
) -> list[Token]:
    """Drop tokens whose word is in the stop list or the custom set.

    Order and original positions are preserved; words are matched by
    exact string equality on the normalized form.
    """
    excluded = stoplist.words | custom
    return [t for t in tokens if t.word not in excluded]


def drop_duplicate_tokens(tokens: list[Token], scope: str = "per_record") -> list[Token]:
    """Keep only the first occurrence of each word within the given scope.

    ``scope`` is "per_record" or "global". Off by default in the pipeline;
    callers opt in.
    """
    if scope not in DEDUPE_SCOPES:
        raise ValueError(f"unknown dedupe scope {scope!r}; expected one of {DEDUPE_SCOPES}")
    seen: set = set()
    kept = []
    for t in tokens:
        key = (t.record_id, t.word) if scope == "per_record" else t.word
        if key in seen:
            continue
        seen.add(key)
        kept.append(t)
    return kept


def _parse_stopword_text(content: str) -> frozenset[str]:
    words = set()
    for line in content.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.add(line.lower())
    return frozenset(words)


def load_stoplist(path: str | Path) -> StopList:
    """Read a stop-word file: one word per line, '#' comments ignored."""
    content = Path(path).read_text(encoding="utf-8")
    return StopList(words=_parse_stopword_text(content), provenance="user file")


def bundled_stoplist() -> StopList:
    """The stop-word list shipped with the package."""
    content = resources.files("sentislope").joinpath("data/stopwords.txt").read_text("utf-8")
    return StopList(words=_parse_stopword_text(content), provenance="bundled")


def inline_stoplist(words: Iterable[str]) -> StopList:
    return StopList(words=frozenset(w.lower() for w in words), provenance="inline")
