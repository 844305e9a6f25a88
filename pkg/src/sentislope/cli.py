"""Command-line surface: synth | tokenize | analyze | plot.

Outputs are a pure function of (input bytes, lexicon bytes, config):
no timestamps or environment data enter any artifact, and files are
written atomically. Exit codes: 0 ok, 2 input/usage, 3 lexicon,
4 numerical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import artifacts, insight, metrics as metrics_mod, svgplot, synth, textprep
from .artifacts import METRIC_NAMES
from .corpus import Corpus, SequenceSlice, load_corpus, split_sequences
from .errors import CorpusError, LexiconError, SmoothingError
from .lexicon import Category, bundled_lexicon_path, load_bing, load_nrc
from .metrics import RecordMetrics
from .smoother import SmoothParams, SmoothedSeries, backend_name, smooth_series
from .smoother.core import ALL_X, SeriesPoint

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_LEXICON = 3
EXIT_NUMERICAL = 4


@dataclass
class RunConfig:
    """Everything a run depends on; serialized into run_meta.json."""

    input_path: Path
    input_format: str
    out_dir: Path
    nrc_path: Path
    bing_pos_path: Path
    bing_neg_path: Path
    sequences: int = 3
    labels: list[str] | None = None
    params: SmoothParams = field(default_factory=SmoothParams)
    policy: str = "polarity_only"
    stopwords_path: Path | None = None
    custom_words: frozenset[str] = frozenset()
    dedupe: str = "off"
    skip_unmatched: bool = False
    zeros_as_agree: bool = False
    k_sigma: float | None = None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _grid_value(text: str) -> int | str:
    if text == ALL_X:
        return ALL_X
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f'must be an integer >= 2 or "{ALL_X}", got {text}')
    return value


def _comma_list(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _infer_format(path: Path, explicit: str | None) -> str:
    if explicit:
        return explicit
    return "csv" if path.suffix.lower() == ".csv" else "jsonl"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="senti",
        description="Lexicon sentiment analytics over ordered short-text corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_synth = sub.add_parser("synth", help="generate the deterministic demo corpus")
    p_synth.add_argument("--out", type=Path, required=True, help="output JSONL path")
    p_synth.add_argument("--records", type=_positive_int, default=synth.DEFAULT_RECORDS)
    p_synth.add_argument("--seed", type=int, default=synth.DEFAULT_SEED)

    def add_input_opts(p):
        p.add_argument("--input", type=Path, required=True, help="corpus file")
        p.add_argument("--format", choices=("jsonl", "csv"), default=None,
                       help="input format (default: by file extension)")
        p.add_argument("--stopwords", type=Path, default=None,
                       help="stop-word file overriding the bundled list")
        p.add_argument("--custom-words", type=_comma_list, default=[],
                       help="comma-separated extra words to exclude")
        p.add_argument("--dedupe", choices=("off", "per_record", "global"), default="off",
                       help="drop repeated words within the given scope")

    p_tok = sub.add_parser("tokenize", help="write the tidy token table")
    add_input_opts(p_tok)
    p_tok.add_argument("--out", type=Path, required=True, help="output directory")

    p_an = sub.add_parser("analyze", help="run the full pipeline")
    add_input_opts(p_an)
    p_an.add_argument("--nrc", type=Path, default=None, help="emotion lexicon (TSV association format)")
    p_an.add_argument("--bing-pos", type=Path, default=None, help="positive word list")
    p_an.add_argument("--bing-neg", type=Path, default=None, help="negative word list")
    p_an.add_argument("--sequences", type=_positive_int, default=3, help="number of temporal sequences")
    p_an.add_argument("--labels", type=_comma_list, default=None, help="comma-separated sequence labels")
    p_an.add_argument("--span", type=float, default=0.75, help="window fraction in (0, 1]")
    p_an.add_argument("--degree", type=int, choices=(0, 1, 2), default=2, help="local polynomial degree")
    p_an.add_argument("--ci", type=float, default=0.95, help="confidence level in (0, 1)")
    p_an.add_argument("--grid", type=_grid_value, default=80, help=f'grid points or "{ALL_X}"')
    p_an.add_argument("--policy", choices=metrics_mod.COUNT_POLICIES, default="polarity_only",
                      help="sentiment_count policy")
    p_an.add_argument("--skip-unmatched", action="store_true",
                      help="exclude zero-match records from score smoothing")
    p_an.add_argument("--zeros-as-agree", action="store_true",
                      help="count zero scores as agreeing in the lexicon comparison")
    p_an.add_argument("--k-sigma", type=float, default=None,
                      help="flag against fit +/- K*sd instead of the confidence band")
    p_an.add_argument("--out", type=Path, required=True, help="output directory")

    p_plot = sub.add_parser("plot", help="render report.svg from an analysis directory")
    p_plot.add_argument("--analysis", type=Path, required=True, help="directory written by analyze")
    p_plot.add_argument("--out", type=Path, default=None, help="output SVG path")

    return parser


def _load_stoplist(args) -> textprep.StopList:
    if args.stopwords is not None:
        return textprep.load_stoplist(args.stopwords)
    return textprep.bundled_stoplist()


def build_tokens(corpus: Corpus, stoplist: textprep.StopList,
                 custom: frozenset[str], dedupe: str) -> list[textprep.Token]:
    tokens = textprep.tokenize_corpus(corpus.records)
    tokens = textprep.remove_stopwords(tokens, stoplist, custom)
    if dedupe != "off":
        tokens = textprep.drop_duplicate_tokens(tokens, scope=dedupe)
    return tokens


def cmd_synth(args) -> int:
    content = synth.corpus_jsonl(args.records, args.seed)
    artifacts.atomic_write_text(args.out, content)
    print(f"wrote {args.out} ({args.records} records, seed {args.seed})", file=sys.stderr)
    return EXIT_OK


def cmd_tokenize(args) -> int:
    fmt = _infer_format(args.input, args.format)
    corpus = load_corpus(args.input, fmt)
    stoplist = _load_stoplist(args)
    tokens = build_tokens(corpus, stoplist, frozenset(w.lower() for w in args.custom_words), args.dedupe)
    out = args.out / "tokens.csv"
    artifacts.write_tokens_csv(out, tokens)
    print(f"wrote {out} ({len(tokens)} tokens from {len(corpus)} records)", file=sys.stderr)
    return EXIT_OK


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _score_series_points(
    slice_: SequenceSlice,
    record_metrics: list[RecordMetrics],
    metric: str,
    matched: dict[str, dict[int, int]],
    skip_unmatched: bool,
) -> tuple[list[int], list[float]]:
    """Record ids and values entering the smoother for one (metric, slice)."""
    ids, values = [], []
    lexicon_key = "nrc" if metric in ("sentiment_count", "nrc_score") else "bing"
    for m in record_metrics:
        if not slice_.contains(m.record_id):
            continue
        if skip_unmatched and metric != "sentiment_count":
            if matched[lexicon_key].get(m.record_id, 0) == 0:
                continue
        ids.append(m.record_id)
        values.append(float(getattr(m, metric)))
    return ids, values


def run_analyze(cfg: RunConfig) -> None:
    corpus = load_corpus(cfg.input_path, cfg.input_format)
    stoplist = (
        textprep.load_stoplist(cfg.stopwords_path)
        if cfg.stopwords_path is not None
        else textprep.bundled_stoplist()
    )
    tokens = build_tokens(corpus, stoplist, cfg.custom_words, cfg.dedupe)

    nrc = load_nrc(cfg.nrc_path)
    bing = load_bing(cfg.bing_pos_path, cfg.bing_neg_path)
    record_metrics = metrics_mod.score_corpus(corpus, tokens, nrc, bing, cfg.policy)

    grouped = metrics_mod.group_tokens(tokens)
    matched = {
        name: {
            rid: metrics_mod.matched_token_count(toks, lex)
            for rid, toks in grouped.items()
        }
        for name, lex in (("nrc", nrc), ("bing", bing))
    }

    slices = split_sequences(corpus, cfg.sequences, cfg.labels)

    series_map: dict[tuple[str, int], SmoothedSeries] = {}
    flags: list[insight.RecordFlag] = []
    extrema: list[tuple[str, insight.Extremum]] = []
    sequence_entries = []
    summaries_by_slice: dict[int, dict[str, insight.SequenceSummary]] = {}

    for metric in METRIC_NAMES:
        for slice_ in slices:
            ids, values = _score_series_points(
                slice_, record_metrics, metric, matched, cfg.skip_unmatched
            )
            points = [SeriesPoint(float(i), v) for i, v in zip(ids, values)]
            try:
                series = smooth_series(points, cfg.params)
            except SmoothingError as exc:
                raise SmoothingError(
                    f"metric {metric}, sequence {slice_.index}: {exc}"
                ) from exc
            series_map[(metric, slice_.index)] = series
            band = "sigma" if cfg.k_sigma is not None else "ci"
            flags.extend(
                insight.flag_records(ids, values, series, metric, band=band,
                                     k_sigma=cfg.k_sigma or 2.0)
            )
            extrema.extend(
                (metric, e) for e in insight.find_extrema(series, sequence=slice_.index)
            )
            summaries_by_slice.setdefault(slice_.index, {})[metric] = (
                insight.summarize_sequence(slice_, values, series)
            )

    for slice_ in slices:
        sequence_entries.append(
            artifacts.sequence_payload(
                {
                    "index": slice_.index,
                    "label": slice_.label,
                    "start_id": slice_.start_id,
                    "end_id": slice_.end_id,
                    "n": slice_.size,
                },
                summaries_by_slice[slice_.index],
            )
        )

    agreement = insight.lexicon_agreement(record_metrics, cfg.zeros_as_agree)

    out = cfg.out_dir
    artifacts.write_metrics_csv(out / "metrics.csv", record_metrics)
    artifacts.write_smoothed_csv(out / "smoothed.csv", series_map)
    artifacts.write_flags_csv(out / "flags.csv", flags)
    artifacts.write_extrema_csv(out / "extrema.csv", extrema)
    artifacts.write_json(out / "summary.json", artifacts.summary_payload(sequence_entries, agreement))

    total_polarity = sum(
        m.nrc_counts[Category.POSITIVE] + m.nrc_counts[Category.NEGATIVE]
        for m in record_metrics
    )
    total_all = sum(sum(m.nrc_counts.values()) for m in record_metrics)
    run_meta = {
        "tool": {"name": "sentislope", "version": version(), "smoother_backend": backend_name()},
        "input": {
            "path": str(cfg.input_path),
            "format": cfg.input_format,
            "sha256": _sha256(cfg.input_path),
            "records": len(corpus),
        },
        "lexicons": {
            "nrc": {"path": str(cfg.nrc_path), "sha256": _sha256(cfg.nrc_path), "entries": len(nrc)},
            "bing_positive": {"path": str(cfg.bing_pos_path), "sha256": _sha256(cfg.bing_pos_path)},
            "bing_negative": {"path": str(cfg.bing_neg_path), "sha256": _sha256(cfg.bing_neg_path)},
            "bing_entries": len(bing),
        },
        "stopwords": {
            "provenance": stoplist.provenance,
            "path": str(cfg.stopwords_path) if cfg.stopwords_path else None,
            "words": len(stoplist.words),
            "custom_words": sorted(cfg.custom_words),
            "dedupe": cfg.dedupe,
        },
        "sequences": {
            "k": cfg.sequences,
            "labels": [s.label for s in slices],
            "sizes": [s.size for s in slices],
        },
        "smoothing": artifacts.smooth_params_payload(cfg.params),
        "policy": {
            "sentiment_count": cfg.policy,
            "skip_unmatched": cfg.skip_unmatched,
            "zeros_as_agree": cfg.zeros_as_agree,
            "flag_band": "sigma" if cfg.k_sigma is not None else "ci",
            "k_sigma": cfg.k_sigma,
        },
        "totals": {
            "sentiment_count_polarity_only": total_polarity,
            "sentiment_count_all_categories": total_all,
        },
        "output_dir": str(cfg.out_dir),
    }
    artifacts.write_json(out / "run_meta.json", run_meta)


def cmd_analyze(args) -> int:
    fmt = _infer_format(args.input, args.format)
    cfg = RunConfig(
        input_path=args.input,
        input_format=fmt,
        out_dir=args.out,
        nrc_path=args.nrc or bundled_lexicon_path("nrc"),
        bing_pos_path=args.bing_pos or bundled_lexicon_path("bing_positive"),
        bing_neg_path=args.bing_neg or bundled_lexicon_path("bing_negative"),
        sequences=args.sequences,
        labels=args.labels,
        params=SmoothParams(span=args.span, degree=args.degree, ci_level=args.ci, grid=args.grid),
        policy=args.policy,
        stopwords_path=args.stopwords,
        custom_words=frozenset(w.lower() for w in args.custom_words),
        dedupe=args.dedupe,
        skip_unmatched=args.skip_unmatched,
        zeros_as_agree=args.zeros_as_agree,
        k_sigma=args.k_sigma,
    )
    run_analyze(cfg)
    print(f"analysis written to {args.out}", file=sys.stderr)
    return EXIT_OK


# raw points per panel are strided down to this many to keep report.svg
# tractable on large corpora; fit, band, and mean are never subsampled
MAX_POINTS_PER_PANEL = 2000


def _stride_points(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    if len(points) <= MAX_POINTS_PER_PANEL:
        return points
    step = -(-len(points) // MAX_POINTS_PER_PANEL)
    return points[::step]


def _plot_panels(analysis_dir: Path):
    smoothed_path = analysis_dir / "smoothed.csv"
    summary_path = analysis_dir / "summary.json"
    if not smoothed_path.exists() or not summary_path.exists():
        raise CorpusError(f"{analysis_dir}: smoothed.csv and summary.json are required")
    series = artifacts.read_smoothed_csv(smoothed_path)
    summary = json.loads(summary_path.read_text(encoding="utf-8"))
    sequences = summary["sequences"]

    points_by_metric_seq: dict[tuple[str, int], list[tuple[float, float]]] = {}
    metrics_path = analysis_dir / "metrics.csv"
    if metrics_path.exists():
        import csv as _csv

        bounds = [(s["index"], s["start_id"], s["end_id"]) for s in sequences]
        with open(metrics_path, newline="", encoding="utf-8") as fh:
            for row in _csv.DictReader(fh):
                rid = int(row["record_id"])
                for index, start, end in bounds:
                    if start <= rid <= end:
                        for metric in METRIC_NAMES:
                            if metric in row:
                                points_by_metric_seq.setdefault((metric, index), []).append(
                                    (float(rid), float(row[metric]))
                                )
                        break

    metric_names = [m for m in METRIC_NAMES if any(key[0] == m for key in series)]
    panels = []
    for metric in metric_names:
        for seq in sequences:
            key = (metric, seq["index"])
            cols = series[key]
            panels.append(
                {
                    "title": f'{metric} [{seq["label"]}]',
                    "x": cols["x"],
                    "fit": cols["fit"],
                    "lower": cols["lower"],
                    "upper": cols["upper"],
                    "mean": seq["metrics"][metric]["mean"],
                    "points": _stride_points(points_by_metric_seq.get(key, [])),
                }
            )
    return panels, len(metric_names), len(sequences)


def cmd_plot(args) -> int:
    panels, n_rows, n_cols = _plot_panels(args.analysis)
    out = args.out or (args.analysis / "report.svg")
    artifacts.atomic_write_text(out, svgplot.render_report(panels, n_rows, n_cols))
    print(f"wrote {out} ({len(panels)} panels)", file=sys.stderr)
    return EXIT_OK


def version() -> str:
    from importlib.metadata import PackageNotFoundError, version as pkg_version

    try:
        return pkg_version("sentislope")
    except PackageNotFoundError:
        return "0.0.0+unknown"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "synth": cmd_synth,
        "tokenize": cmd_tokenize,
        "analyze": cmd_analyze,
        "plot": cmd_plot,
    }
    try:
        return handlers[args.command](args)
    except (CorpusError, OSError) as exc:
        print(f"senti: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LexiconError as exc:
        print(f"senti: lexicon error: {exc}", file=sys.stderr)
        return EXIT_LEXICON
    except SmoothingError as exc:
        print(f"senti: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"senti: invalid arguments: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
