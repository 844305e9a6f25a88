"""Per-record sentiment metrics: emotion counts, sentiment-use count, and
the summative +1/-1 polarity score.

All functions are pure and order-independent within a record, so results
are invariant under permutation of a record's tokens.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .corpus import Corpus
from .lexicon import Category, Lexicon, lookup
from .textprep import Token

COUNT_POLICIES = ("polarity_only", "all_categories")


@dataclass(frozen=True)
class RecordMetrics:
    record_id: int
    nrc_counts: Mapping[Category, int]
    sentiment_count: int
    nrc_score: int
    bing_score: int


def emotion_counts(tokens: Iterable[Token], nrc: Lexicon) -> dict[Category, int]:
    """Count category hits for one record's tokens; all 10 keys present."""
    counts = {c: 0 for c in Category}
    for token in tokens:
        for category in lookup(nrc, token.word):
            counts[category] += 1
    return counts


def sentiment_count(counts: Mapping[Category, int], policy: str = "polarity_only") -> int:
    """Number of sentiment uses in a record under the given counting policy.

    "polarity_only" counts positive + negative hits; "all_categories"
    sums all 10 categories, so a multi-category word counts once per
    category it carries.
    """
    if policy not in COUNT_POLICIES:
        raise ValueError(f"unknown counting policy {policy!r}; expected one of {COUNT_POLICIES}")
    if policy == "polarity_only":
        return counts[Category.POSITIVE] + counts[Category.NEGATIVE]
    return sum(counts.values())


def polarity_score(tokens: Iterable[Token], lexicon: Lexicon) -> int:
    """Sum of +1 per positive and -1 per negative token.

    A word tagged with both polarities contributes 0 to the score (it
    still contributes 2 to the polarity-only sentiment count).
    """
    score = 0
    for token in tokens:
        categories = lookup(lexicon, token.word)
        if Category.POSITIVE in categories:
            score += 1
        if Category.NEGATIVE in categories:
            score -= 1
    return score


def matched_token_count(tokens: Iterable[Token], lexicon: Lexicon) -> int:
    """Number of tokens with at least one category in the lexicon."""
    return sum(1 for t in tokens if lookup(lexicon, t.word))


def group_tokens(tokens: Iterable[Token]) -> dict[int, list[Token]]:
    grouped: dict[int, list[Token]] = {}
    for token in tokens:
        grouped.setdefault(token.record_id, []).append(token)
    return grouped


def score_corpus(
    corpus: Corpus,
    tokens: Iterable[Token],
    nrc: Lexicon,
    bing: Lexicon,
    policy: str = "polarity_only",
) -> list[RecordMetrics]:
    """One RecordMetrics per record, in corpus order.

    Records with zero tokens (or zero matches) are included with all-zero
    metrics rather than dropped.
    """
    grouped = group_tokens(tokens)
    out = []
    for record in corpus.records:
        record_tokens = grouped.get(record.id, [])
        counts = emotion_counts(record_tokens, nrc)
        out.append(
            RecordMetrics(
                record_id=record.id,
                nrc_counts=counts,
                sentiment_count=sentiment_count(counts, policy),
                nrc_score=polarity_score(record_tokens, nrc),
                bing_score=polarity_score(record_tokens, bing),
            )
        )
    return out
