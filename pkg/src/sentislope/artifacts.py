"""Output artifacts: deterministic CSV/JSON writers and readers.

All files are written atomically (temp file in the target directory,
then rename). Floats are serialized with repr, the shortest string that
round-trips to the identical double, so loading smoothed.csv rebuilds
the arrays exactly and identical runs yield byte-identical trees.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .insight import AgreementReport, Extremum, RecordFlag, SequenceSummary
from .lexicon import CSV_CATEGORY_ORDER
from .metrics import RecordMetrics
from .smoother import SmoothedSeries, SmoothParams
from .textprep import Token

METRIC_NAMES = ("sentiment_count", "nrc_score", "bing_score")

METRICS_HEADER = ["record_id"] + [c.value for c in CSV_CATEGORY_ORDER] + [
    "sentiment_count",
    "nrc_score",
    "bing_score",
]
SMOOTHED_HEADER = ["metric", "sequence", "x", "fit", "fit_clamped", "se", "lower", "upper", "cond_var"]
FLAGS_HEADER = ["record_id", "metric", "value", "fit", "lower", "upper", "status"]
EXTREMA_HEADER = ["metric", "sequence", "x", "fit", "kind"]

# Metrics that are counts: their published fit is clamped at zero while
# the raw fit is kept alongside.
NONNEGATIVE_METRICS = frozenset({"sentiment_count"})


def atomic_write_text(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(content)
        os.chmod(tmp, 0o644)  # mkstemp defaults to 0600
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _fmt(value: float) -> str:
    return repr(float(value))


def write_tokens_csv(path: Path, tokens: Iterable[Token]) -> None:
    rows = ((t.record_id, t.position, t.word) for t in tokens)
    atomic_write_text(path, _csv_text(["record_id", "position", "word"], rows))


def write_metrics_csv(path: Path, metrics: Iterable[RecordMetrics]) -> None:
    rows = []
    for m in metrics:
        rows.append(
            [m.record_id]
            + [m.nrc_counts[c] for c in CSV_CATEGORY_ORDER]
            + [m.sentiment_count, m.nrc_score, m.bing_score]
        )
    atomic_write_text(path, _csv_text(METRICS_HEADER, rows))


def write_smoothed_csv(path: Path, series: Mapping[tuple[str, int], SmoothedSeries]) -> None:
    """Write every (metric, sequence) series; keys iterate in insertion order."""
    rows = []
    for (metric, seq_index), s in series.items():
        clamp = metric in NONNEGATIVE_METRICS
        for i in range(len(s.eval_x)):
            fit = float(s.fit[i])
            clamped = max(fit, 0.0) if clamp else fit
            rows.append(
                [
                    metric,
                    seq_index,
                    _fmt(s.eval_x[i]),
                    _fmt(fit),
                    _fmt(clamped),
                    _fmt(s.se[i]),
                    _fmt(s.lower[i]),
                    _fmt(s.upper[i]),
                    _fmt(s.cond_var[i]),
                ]
            )
    atomic_write_text(path, _csv_text(SMOOTHED_HEADER, rows))


def read_smoothed_csv(path: Path) -> dict[tuple[str, int], dict[str, np.ndarray]]:
    """Rebuild the per-(metric, sequence) arrays exactly as written.

    Returns arrays only; params and sequence statistics live in
    summary.json and run_meta.json.
    """
    out: dict[tuple[str, int], dict[str, list[float]]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != SMOOTHED_HEADER:
            raise ValueError(f"{path}: unexpected header {reader.fieldnames}")
        for row in reader:
            key = (row["metric"], int(row["sequence"]))
            cols = out.setdefault(key, {c: [] for c in SMOOTHED_HEADER[2:]})
            for c in SMOOTHED_HEADER[2:]:
                cols[c].append(float(row[c]))
    return {
        key: {c: np.asarray(v, dtype=np.float64) for c, v in cols.items()}
        for key, cols in out.items()
    }


def write_flags_csv(path: Path, flags: Iterable[RecordFlag]) -> None:
    rows = (
        [f.record_id, f.metric, _fmt(f.value), _fmt(f.fit), _fmt(f.lower), _fmt(f.upper), f.status]
        for f in flags
    )
    atomic_write_text(path, _csv_text(FLAGS_HEADER, rows))


def write_extrema_csv(path: Path, extrema: Iterable[tuple[str, Extremum]]) -> None:
    rows = (
        [metric, e.sequence, _fmt(e.x), _fmt(e.fit), e.kind] for metric, e in extrema
    )
    atomic_write_text(path, _csv_text(EXTREMA_HEADER, rows))


def summary_payload(
    sequences: Sequence[Mapping],
    agreement: AgreementReport,
) -> dict:
    return {
        "sequences": list(sequences),
        "agreement": {
            "agreement": agreement.agreement,
            "compared": agreement.compared,
            "sign_matches": agreement.sign_matches,
            "nrc_zero_scores": agreement.nrc_zero,
            "bing_zero_scores": agreement.bing_zero,
            "zeros_as_agree": agreement.zeros_as_agree,
        },
    }


def sequence_payload(
    slice_info: Mapping, summaries: Mapping[str, SequenceSummary]
) -> dict:
    entry = dict(slice_info)
    entry["metrics"] = {
        metric: {
            "mean": s.mean,
            "variance": s.variance,
            "fit_min": s.fit_min,
            "fit_max": s.fit_max,
            "amplitude": s.amplitude,
        }
        for metric, s in summaries.items()
    }
    return entry


def write_json(path: Path, payload: Mapping) -> None:
    atomic_write_text(path, json.dumps(payload, indent=2, sort_keys=False) + "\n")


def smooth_params_payload(params: SmoothParams) -> dict:
    return {
        "span": params.span,
        "degree": params.degree,
        "ci_level": params.ci_level,
        "grid": params.grid,
    }
