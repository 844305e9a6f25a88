from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from sentislope.corpus import (
    Corpus,
    TextRecord,
    load_corpus,
    sequence_sizes,
    split_sequences,
)
from sentislope.errors import CorpusError


def write(tmp_path, name, content, binary=False):
    path = tmp_path / name
    if binary:
        path.write_bytes(content)
    else:
        path.write_text(content, encoding="utf-8")
    return path


def make_corpus(n):
    return Corpus(
        records=tuple(TextRecord(id=i, text="") for i in range(1, n + 1)),
        source_path="<memory>",
    )


class TestLoadJsonl:
    def test_three_lines_assign_ordinal_ids(self, tmp_path):
        path = write(tmp_path, "c.jsonl", '{"text": "a"}\n{"text": "b"}\n{"text": "c"}\n')
        corpus = load_corpus(path, "jsonl")
        assert [r.id for r in corpus.records] == [1, 2, 3]
        assert [r.text for r in corpus.records] == ["a", "b", "c"]

    def test_empty_file_is_zero_records(self, tmp_path):
        path = write(tmp_path, "c.jsonl", "")
        with pytest.raises(CorpusError, match="zero records"):
            load_corpus(path, "jsonl")

    def test_malformed_line_reports_row_number(self, tmp_path):
        path = write(tmp_path, "c.jsonl", '{"text": "a"}\nnot json\n')
        with pytest.raises(CorpusError, match=":2:"):
            load_corpus(path, "jsonl")

    def test_missing_text_key(self, tmp_path):
        path = write(tmp_path, "c.jsonl", '{"body": "a"}\n')
        with pytest.raises(CorpusError, match="text"):
            load_corpus(path, "jsonl")

    def test_non_string_timestamp_rejected(self, tmp_path):
        path = write(tmp_path, "c.jsonl", '{"text": "a", "timestamp": 5}\n')
        with pytest.raises(CorpusError, match="timestamp"):
            load_corpus(path, "jsonl")

    def test_timestamp_and_unknown_keys(self, tmp_path):
        line = json.dumps({"text": "a", "timestamp": "2023-05-01T00:00:00+00:00", "user": "x"})
        corpus = load_corpus(write(tmp_path, "c.jsonl", line + "\n"), "jsonl")
        assert corpus.records[0].timestamp == "2023-05-01T00:00:00+00:00"

    def test_invalid_utf8_reports_row(self, tmp_path):
        path = write(tmp_path, "c.jsonl", b'{"text": "ok"}\n{"text": "\xff"}\n', binary=True)
        with pytest.raises(CorpusError, match=":2:"):
            load_corpus(path, "jsonl")

    def test_missing_file(self, tmp_path):
        with pytest.raises(CorpusError, match="cannot read"):
            load_corpus(tmp_path / "absent.jsonl", "jsonl")

    def test_unknown_format(self, tmp_path):
        path = write(tmp_path, "c.jsonl", '{"text": "a"}\n')
        with pytest.raises(CorpusError, match="format"):
            load_corpus(path, "tsv")


class TestLoadCsv:
    def test_five_rows_keep_order(self, tmp_path):
        rows = "\n".join(f"row {i}" for i in range(1, 6))
        path = write(tmp_path, "c.csv", "text\n" + rows + "\n")
        corpus = load_corpus(path, "csv")
        assert len(corpus) == 5
        assert corpus.records[4].text == "row 5"
        assert corpus.records[4].id == 5

    def test_quoted_fields(self, tmp_path):
        path = write(tmp_path, "c.csv", 'text,timestamp\n"a, with ""quotes""",2023-01-01\n')
        corpus = load_corpus(path, "csv")
        assert corpus.records[0].text == 'a, with "quotes"'
        assert corpus.records[0].timestamp == "2023-01-01"

    def test_header_without_text_column(self, tmp_path):
        path = write(tmp_path, "c.csv", "body\nhello\n")
        with pytest.raises(CorpusError, match="text"):
            load_corpus(path, "csv")

    def test_header_only_is_zero_records(self, tmp_path):
        path = write(tmp_path, "c.csv", "text\n")
        with pytest.raises(CorpusError, match="zero records"):
            load_corpus(path, "csv")


def reserialize_jsonl(corpus: Corpus) -> str:
    lines = []
    for r in corpus.records:
        obj = {"text": r.text}
        if r.timestamp is not None:
            obj["timestamp"] = r.timestamp
        lines.append(json.dumps(obj, ensure_ascii=False))
    return "\n".join(lines) + "\n"


def test_load_reserialize_round_trip(tmp_path, mini_corpus_path):
    corpus = load_corpus(mini_corpus_path, "jsonl")
    second = load_corpus(write(tmp_path, "again.jsonl", reserialize_jsonl(corpus)), "jsonl")
    assert len(second) == len(corpus)
    assert [r.text for r in second.records] == [r.text for r in corpus.records]


class TestSplitSequences:
    def test_even_three_way_split(self):
        slices = split_sequences(make_corpus(49350), 3)
        assert [s.size for s in slices] == [16450, 16450, 16450]

    def test_remainder_goes_to_leading_slices(self):
        slices = split_sequences(make_corpus(10), 3)
        assert [s.size for s in slices] == [4, 3, 3]
        assert [(s.start_id, s.end_id) for s in slices] == [(1, 4), (5, 7), (8, 10)]

    def test_identity_split(self):
        (only,) = split_sequences(make_corpus(5), 1)
        assert (only.start_id, only.end_id) == (1, 5)

    @pytest.mark.parametrize("k", [0, 6, -1])
    def test_k_out_of_range(self, k):
        with pytest.raises(ValueError):
            split_sequences(make_corpus(5), k)

    def test_labels(self):
        slices = split_sequences(make_corpus(9), 3, ["before", "during", "after"])
        assert [s.label for s in slices] == ["before", "during", "after"]
        with pytest.raises(ValueError):
            split_sequences(make_corpus(9), 3, ["just-one"])

    def test_default_labels(self):
        slices = split_sequences(make_corpus(4), 2)
        assert [s.label for s in slices] == ["seq1", "seq2"]

    @given(st.integers(min_value=1, max_value=5000), st.data())
    def test_partition_property(self, n, data):
        k = data.draw(st.integers(min_value=1, max_value=n))
        sizes = sequence_sizes(n, k)
        assert sum(sizes) == n
        assert max(sizes) - min(sizes) <= 1
        slices = split_sequences(make_corpus(min(n, 200)), min(k, min(n, 200)))
        covered = []
        for s in slices:
            covered.extend(range(s.start_id, s.end_id + 1))
        assert covered == list(range(1, min(n, 200) + 1))
