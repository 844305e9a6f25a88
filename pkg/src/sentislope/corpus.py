"""Corpus loading and temporal segmentation.

Records are kept in file order; that order *is* the temporal axis used by
every later stage. Timestamps are carried as opaque strings and never
sorted on.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import CorpusError

FORMATS = ("jsonl", "csv")


@dataclass(frozen=True, slots=True)
class TextRecord:
    """One corpus entry; ``id`` is its 1-based position in corpus order."""

    id: int
    text: str
    timestamp: str | None = None


@dataclass(frozen=True)
class Corpus:
    records: tuple[TextRecord, ...]
    source_path: str

    def __len__(self) -> int:
        return len(self.records)


@dataclass(frozen=True, slots=True)
class SequenceSlice:
    """Contiguous run of record ids forming one temporal sequence."""

    index: int
    start_id: int
    end_id: int
    label: str

    @property
    def size(self) -> int:
        return self.end_id - self.start_id + 1

    def contains(self, record_id: int) -> bool:
        return self.start_id <= record_id <= self.end_id


def _records_from_jsonl(raw: bytes, path: str) -> list[TextRecord]:
    records = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        try:
            decoded = line.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusError(f"{path}:{lineno}: not valid UTF-8: {exc}") from exc
        if not decoded.strip():
            raise CorpusError(f"{path}:{lineno}: blank line in JSONL input")
        try:
            obj = json.loads(decoded)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
        if not isinstance(obj, dict) or not isinstance(obj.get("text"), str):
            raise CorpusError(f"{path}:{lineno}: object with string key 'text' required")
        timestamp = obj.get("timestamp")
        if timestamp is not None and not isinstance(timestamp, str):
            raise CorpusError(f"{path}:{lineno}: 'timestamp' must be a string when present")
        records.append(TextRecord(id=len(records) + 1, text=obj["text"], timestamp=timestamp))
    return records


def _records_from_csv(raw: bytes, path: str) -> list[TextRecord]:
    try:
        decoded = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusError(f"{path}: not valid UTF-8: {exc}") from exc
    reader = csv.DictReader(io.StringIO(decoded, newline=""))
    if reader.fieldnames is None:
        raise CorpusError(f"{path}: zero records")
    if "text" not in reader.fieldnames:
        raise CorpusError(f"{path}: required column 'text' missing from header")
    records = []
    for row in reader:
        text = row.get("text")
        if text is None:
            raise CorpusError(f"{path}: row at line {reader.line_num}: missing 'text' field")
        records.append(
            TextRecord(id=len(records) + 1, text=text, timestamp=row.get("timestamp") or None)
        )
    return records


def load_corpus(path: str | Path, format: str = "jsonl") -> Corpus:
    """Read a corpus file and assign ids 1..n in file order.

    ``format`` is ``"jsonl"`` (one object per line, required string key
    ``text``, optional ``timestamp``) or ``"csv"`` (header row with a
    ``text`` column, optional ``timestamp`` column, RFC-4180 quoting).
    Raises :class:`CorpusError` for unreadable files, malformed rows
    (reported with their row number), and empty inputs.
    """
    if format not in FORMATS:
        raise CorpusError(f"unknown corpus format {format!r}; expected one of {FORMATS}")
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise CorpusError(f"cannot read {path}: {exc}") from exc
    if format == "jsonl":
        records = _records_from_jsonl(raw, str(path))
    else:
        records = _records_from_csv(raw, str(path))
    if not records:
        raise CorpusError(f"{path}: zero records")
    return Corpus(records=tuple(records), source_path=str(path))


def sequence_sizes(n: int, k: int) -> list[int]:
    """Sizes of k contiguous near-even parts of n items.

    When n mod k = r, the first r parts get one extra item; any two sizes
    differ by at most 1 and they sum to n.
    """
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    base, extra = divmod(n, k)
    return [base + 1 if i < extra else base for i in range(k)]


def split_sequences(
    corpus: Corpus, k: int, labels: list[str] | None = None
) -> list[SequenceSlice]:
    """Split the corpus into k contiguous, evenly sized temporal slices."""
    n = len(corpus)
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    if labels is not None and len(labels) != k:
        raise ValueError(f"expected {k} labels, got {len(labels)}")
    sizes = sequence_sizes(n, k)
    slices = []
    start = 1
    for i, size in enumerate(sizes):
        label = labels[i] if labels is not None else f"seq{i + 1}"
        slices.append(
            SequenceSlice(index=i + 1, start_id=start, end_id=start + size - 1, label=label)
        )
        start += size
    return slices
