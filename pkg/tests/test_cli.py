from __future__ import annotations

import csv
import json
import random
from pathlib import Path

import numpy as np
import pytest

import oracles
from sentislope import artifacts
from sentislope.cli import main
from sentislope.smoother import SeriesPoint, SmoothParams, smooth_series

DATA_DIR = Path(__file__).parent / "data"


def run(*argv, capsys=None):
    return main([str(a) for a in argv])


class TestSynth:
    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        assert run("synth", "--out", a, "--records", 50, "--seed", 3) == 0
        assert run("synth", "--out", b, "--records", 50, "--seed", 3) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_seed_changes_output(self, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        run("synth", "--out", a, "--records", 50, "--seed", 3)
        run("synth", "--out", b, "--records", 50, "--seed", 4)
        assert a.read_bytes() != b.read_bytes()

    def test_record_count(self, tmp_path):
        out = tmp_path / "c.jsonl"
        run("synth", "--out", out, "--records", 120)
        lines = out.read_text().splitlines()
        assert len(lines) == 120
        assert all("text" in json.loads(line) for line in lines)


class TestTokenize:
    def test_mini_corpus_matches_golden(self, tmp_path, mini_corpus_path):
        out = tmp_path / "tok"
        assert run("tokenize", "--input", mini_corpus_path, "--out", out) == 0
        assert (out / "tokens.csv").read_text() == (DATA_DIR / "golden_mini_tokens.csv").read_text()

    def test_missing_input_exits_2_and_names_path(self, tmp_path, capsys):
        code = run("tokenize", "--input", tmp_path / "nope.jsonl", "--out", tmp_path)
        assert code == 2
        assert "nope.jsonl" in capsys.readouterr().err

    def test_empty_stopword_file_keeps_all_tokens(self, tmp_path, mini_corpus_path):
        empty = tmp_path / "none.txt"
        empty.write_text("# nothing\n")
        out_a = tmp_path / "a"
        out_b = tmp_path / "b"
        run("tokenize", "--input", mini_corpus_path, "--out", out_a, "--stopwords", empty)
        run("tokenize", "--input", mini_corpus_path, "--out", out_b, "--stopwords", empty)
        text = (out_a / "tokens.csv").read_text()
        assert text == (out_b / "tokens.csv").read_text()
        # stopwords present because nothing was filtered
        words = [row["word"] for row in csv.DictReader(text.splitlines())]
        assert "the" in words and "a" in words

    def test_custom_words_and_dedupe(self, tmp_path, mini_corpus_path):
        out = tmp_path / "tok"
        run(
            "tokenize", "--input", mini_corpus_path, "--out", out,
            "--custom-words", "love,breaking", "--dedupe", "per_record",
        )
        rows = list(csv.DictReader((out / "tokens.csv").read_text().splitlines()))
        words = [r["word"] for r in rows]
        assert "love" not in words
        assert "breaking" not in words
        per_record = [r for r in rows if r["record_id"] == "6"]
        assert [r["word"] for r in per_record] == ["good", "bad"]

    def test_csv_input_inferred(self, tmp_path):
        src = tmp_path / "c.csv"
        src.write_text('text\n"good good"\n')
        out = tmp_path / "tok"
        assert run("tokenize", "--input", src, "--out", out) == 0
        rows = list(csv.DictReader((out / "tokens.csv").read_text().splitlines()))
        assert [r["word"] for r in rows] == ["good", "good"]


@pytest.fixture(scope="module")
def analysis_dir(tmp_path_factory, demo_corpus_path):
    out = tmp_path_factory.mktemp("analysis")
    code = main([
        "analyze", "--input", str(demo_corpus_path), "--sequences", "3",
        "--labels", "before,during,after", "--out", str(out),
    ])
    assert code == 0
    return out


class TestAnalyze:
    def test_outputs_exist(self, analysis_dir):
        for name in (
            "metrics.csv", "smoothed.csv", "flags.csv",
            "extrema.csv", "summary.json", "run_meta.json",
        ):
            assert (analysis_dir / name).exists()

    def test_sequence_sizes(self, analysis_dir):
        meta = json.loads((analysis_dir / "run_meta.json").read_text())
        assert meta["sequences"]["sizes"] == [334, 333, 333]
        assert meta["sequences"]["labels"] == ["before", "during", "after"]

    def test_documented_headers(self, analysis_dir):
        heads = {
            "metrics.csv": artifacts.METRICS_HEADER,
            "smoothed.csv": artifacts.SMOOTHED_HEADER,
            "flags.csv": artifacts.FLAGS_HEADER,
            "extrema.csv": artifacts.EXTREMA_HEADER,
        }
        for name, header in heads.items():
            with open(analysis_dir / name, newline="") as fh:
                assert next(csv.reader(fh)) == list(header)

    def test_metrics_header_exact_column_order(self, analysis_dir):
        expected = (
            "record_id,anger,anticipation,disgust,fear,joy,sadness,surprise,trust,"
            "negative,positive,sentiment_count,nrc_score,bing_score"
        )
        first = (analysis_dir / "metrics.csv").read_text().splitlines()[0]
        assert first == expected

    def test_flags_cover_every_record_and_metric(self, analysis_dir):
        rows = list(csv.DictReader(open(analysis_dir / "flags.csv", newline="")))
        by_metric = {}
        for r in rows:
            by_metric.setdefault(r["metric"], set()).add(int(r["record_id"]))
        assert set(by_metric) == set(artifacts.METRIC_NAMES)
        for ids in by_metric.values():
            assert ids == set(range(1, 1001))

    def test_statuses_are_legal(self, analysis_dir):
        rows = list(csv.DictReader(open(analysis_dir / "flags.csv", newline="")))
        assert {r["status"] for r in rows} <= {"within_band", "above", "below"}

    def test_clamped_fit_nonnegative_for_counts(self, analysis_dir):
        rows = list(csv.DictReader(open(analysis_dir / "smoothed.csv", newline="")))
        for r in rows:
            if r["metric"] == "sentiment_count":
                assert float(r["fit_clamped"]) >= 0.0
                assert float(r["fit_clamped"]) >= float(r["fit"])
            else:
                assert r["fit_clamped"] == r["fit"]

    def test_lexicon_checksums_recorded(self, analysis_dir):
        meta = json.loads((analysis_dir / "run_meta.json").read_text())
        assert len(meta["lexicons"]["nrc"]["sha256"]) == 64
        assert len(meta["input"]["sha256"]) == 64
        assert meta["policy"]["sentiment_count"] == "polarity_only"
        assert meta["totals"]["sentiment_count_all_categories"] >= (
            meta["totals"]["sentiment_count_polarity_only"]
        )

    def test_sequences_zero_is_usage_error(self, tmp_path, demo_corpus_path, capsys):
        with pytest.raises(SystemExit) as err:
            main([
                "analyze", "--input", str(demo_corpus_path),
                "--sequences", "0", "--out", str(tmp_path),
            ])
        assert err.value.code == 2
        assert "usage" in capsys.readouterr().err

    def test_bad_lexicon_exits_3(self, tmp_path, demo_corpus_path, capsys):
        bad = tmp_path / "nrc.tsv"
        bad.write_text("word only-two-fields\n")
        code = main([
            "analyze", "--input", str(demo_corpus_path), "--nrc", str(bad),
            "--out", str(tmp_path / "out"),
        ])
        assert code == 3
        assert "lexicon" in capsys.readouterr().err

    def test_singular_smoothing_exits_4_naming_sequence_and_x0(self, tmp_path, capsys):
        # 4 records per sequence with the default span gives 3-point windows
        # whose zero-weight boundary leaves degree 2 underdetermined.
        src = tmp_path / "tiny.jsonl"
        src.write_text("\n".join('{"text": "love hate"}' for _ in range(12)) + "\n")
        code = main([
            "analyze", "--input", str(src), "--sequences", "3",
            "--degree", "2", "--out", str(tmp_path / "out"),
        ])
        assert code == 4
        err = capsys.readouterr().err
        assert "sequence" in err
        assert "x0=" in err

    def test_demo_count_fit_never_undershoots(self, analysis_dir):
        # Non-negative metric: the raw fit may dip below 0 in principle,
        # but on the bundled demo it stays comfortably non-negative.
        rows = list(csv.DictReader(open(analysis_dir / "smoothed.csv", newline="")))
        fits = [float(r["fit"]) for r in rows if r["metric"] == "sentiment_count"]
        assert min(fits) >= -1e-9

    def test_smoothing_flags_echoed_in_run_meta(self, tmp_path, demo_corpus_path):
        out = tmp_path / "tuned"
        code = main([
            "analyze", "--input", str(demo_corpus_path), "--sequences", "2",
            "--span", "0.5", "--degree", "1", "--ci", "0.9", "--grid", "all-x",
            "--policy", "all_categories", "--out", str(out),
        ])
        assert code == 0
        meta = json.loads((out / "run_meta.json").read_text())
        assert meta["smoothing"] == {"span": 0.5, "degree": 1, "ci_level": 0.9, "grid": "all-x"}
        assert meta["policy"]["sentiment_count"] == "all_categories"
        rows = list(csv.DictReader(open(out / "smoothed.csv", newline="")))
        per_seq = sum(1 for r in rows if r["metric"] == "nrc_score" and r["sequence"] == "1")
        assert per_seq == 500  # all-x grid: one row per record of the sequence

    def test_skip_unmatched_restricts_score_series(self, tmp_path, demo_corpus_path):
        out = tmp_path / "skip"
        code = main([
            "analyze", "--input", str(demo_corpus_path), "--sequences", "3",
            "--skip-unmatched", "--out", str(out),
        ])
        assert code == 0
        rows = list(csv.DictReader(open(out / "flags.csv", newline="")))
        n_count = sum(1 for r in rows if r["metric"] == "sentiment_count")
        n_nrc = sum(1 for r in rows if r["metric"] == "nrc_score")
        assert n_count == 1000
        assert n_nrc < 1000  # unmatched records dropped from the score series


class TestSmoothedRoundTrip:
    def test_exact_array_round_trip(self, tmp_path):
        rng = random.Random(1)
        xs, ys = oracles.random_series(rng, 30)
        s = smooth_series(
            [SeriesPoint(a, b) for a, b in zip(xs, ys)], SmoothParams(grid=21)
        )
        path = tmp_path / "smoothed.csv"
        artifacts.write_smoothed_csv(path, {("nrc_score", 1): s})
        loaded = artifacts.read_smoothed_csv(path)[("nrc_score", 1)]
        assert np.array_equal(loaded["x"], s.eval_x)
        assert np.array_equal(loaded["fit"], s.fit)
        assert np.array_equal(loaded["se"], s.se)
        assert np.array_equal(loaded["lower"], s.lower)
        assert np.array_equal(loaded["upper"], s.upper)
        assert np.array_equal(loaded["cond_var"], s.cond_var)


class TestPlot:
    def test_report_structure(self, analysis_dir):
        assert main(["plot", "--analysis", str(analysis_dir)]) == 0
        svg = (analysis_dir / "report.svg").read_text()
        assert svg.count('class="fit"') == 9  # 3 metrics x 3 sequences
        assert svg.count('class="mean"') == 9
        assert svg.count('class="band"') == 9
        assert svg.count("<svg") == 1
        assert "<script" not in svg

    def test_missing_inputs_exit_2(self, tmp_path, capsys):
        assert main(["plot", "--analysis", str(tmp_path)]) == 2
        assert "required" in capsys.readouterr().err

    def test_renders_without_metrics_csv(self, tmp_path, analysis_dir):
        # raw points are optional; fit and band still render
        stripped = tmp_path / "stripped"
        stripped.mkdir()
        for name in ("smoothed.csv", "summary.json"):
            (stripped / name).write_bytes((analysis_dir / name).read_bytes())
        assert main(["plot", "--analysis", str(stripped)]) == 0
        svg = (stripped / "report.svg").read_text()
        assert svg.count('class="fit"') == 9
        assert svg.count('class="pt"') == 0
