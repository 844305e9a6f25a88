"""Word-category lexicons: a ten-category emotion lexicon and a two-polarity
opinion lexicon, both loaded from their standard file layouts.

Lookups are exact string matches on lower-case words; there is no fuzzy
matching or stemming anywhere in the pipeline.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LexiconError, LexiconWarning


class Category(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ANGER = "anger"
    FEAR = "fear"
    ANTICIPATION = "anticipation"
    TRUST = "trust"
    SURPRISE = "surprise"
    SADNESS = "sadness"
    JOY = "joy"
    DISGUST = "disgust"


NRC_CATEGORIES = frozenset(Category)
BING_CATEGORIES = frozenset({Category.POSITIVE, Category.NEGATIVE})

# Column order used by metrics.csv: emotions alphabetically, then polarities.
CSV_CATEGORY_ORDER = (
    Category.ANGER,
    Category.ANTICIPATION,
    Category.DISGUST,
    Category.FEAR,
    Category.JOY,
    Category.SADNESS,
    Category.SURPRISE,
    Category.TRUST,
    Category.NEGATIVE,
    Category.POSITIVE,
)

_BY_NAME = {c.value: c for c in Category}


@dataclass(frozen=True)
class Lexicon:
    name: str  # "nrc" | "bing"
    entries: dict[str, frozenset[Category]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def legal_categories(self) -> frozenset[Category]:
        return NRC_CATEGORIES if self.name == "nrc" else BING_CATEGORIES


def lookup(lexicon: Lexicon, word: str) -> frozenset[Category]:
    """Category set for a word; empty for unknown words."""
    return lexicon.entries.get(word, frozenset())


def load_nrc(path: str | Path) -> Lexicon:
    """Load an association-format emotion lexicon.

    Each line is ``word<TAB>category<TAB>flag`` with flag 0 or 1; a word
    enters the lexicon with every category flagged 1, and words whose
    flags are all 0 stay absent. Duplicate (word, category) lines are
    collapsed with a warning. Malformed lines, unknown category names,
    and an empty result are errors.
    """
    path = Path(path)
    entries: dict[str, set[Category]] = {}
    seen: set[tuple[str, str]] = set()
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise LexiconError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise LexiconError(f"{path}:{lineno}: expected 3 tab-separated fields")
        word, cat_name, flag = (p.strip() for p in parts)
        if cat_name not in _BY_NAME:
            raise LexiconError(f"{path}:{lineno}: unknown category {cat_name!r}")
        if flag not in ("0", "1"):
            raise LexiconError(f"{path}:{lineno}: flag must be 0 or 1, got {flag!r}")
        word = word.lower()
        if (word, cat_name) in seen:
            warnings.warn(
                f"{path}:{lineno}: duplicate entry for ({word!r}, {cat_name!r})",
                LexiconWarning,
                stacklevel=2,
            )
            continue
        seen.add((word, cat_name))
        if flag == "1":
            entries.setdefault(word, set()).add(_BY_NAME[cat_name])
    if not entries:
        raise LexiconError(f"{path}: empty lexicon")
    return Lexicon(name="nrc", entries={w: frozenset(cats) for w, cats in entries.items()})


def _read_word_list(path: Path) -> list[str]:
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise LexiconError(f"cannot read {path}: {exc}") from exc
    words = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith(";"):
            continue
        words.append(line.lower())
    return words


def load_bing(path_positive: str | Path, path_negative: str | Path) -> Lexicon:
    """Load a two-list polarity lexicon (one word per line, ';' comments).

    A word appearing on both lists is a hard error: corrupt inputs must
    not silently skew scores.
    """
    positive = set(_read_word_list(Path(path_positive)))
    negative = set(_read_word_list(Path(path_negative)))
    overlap = positive & negative
    if overlap:
        sample = ", ".join(sorted(overlap)[:5])
        raise LexiconError(f"word(s) on both polarity lists: {sample}")
    if not positive and not negative:
        raise LexiconError(f"{path_positive}, {path_negative}: empty lexicon")
    entries: dict[str, frozenset[Category]] = {}
    for word in positive:
        entries[word] = frozenset({Category.POSITIVE})
    for word in negative:
        entries[word] = frozenset({Category.NEGATIVE})
    return Lexicon(name="bing", entries=entries)


def bundled_lexicon_path(name: str) -> Path:
    """Path of a fixture lexicon shipped with the package.

    ``name`` is one of "nrc", "bing_positive", "bing_negative". These are
    small synthetic word lists in the standard file layouts, meant for
    tests and the demo corpus; real analyses should supply full lexicon
    files.
    """
    files = {
        "nrc": "nrc_fixture.tsv",
        "bing_positive": "bing_positive.txt",
        "bing_negative": "bing_negative.txt",
    }
    if name not in files:
        raise ValueError(f"unknown bundled lexicon {name!r}")
    from importlib import resources

    with resources.as_file(
        resources.files("sentislope").joinpath(f"data/lexicons/{files[name]}")
    ) as p:
        return Path(p)
