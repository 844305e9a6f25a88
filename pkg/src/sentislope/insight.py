"""Analytic readouts from smoothed series: sequence summaries, per-record
band membership, slope extrema, and agreement between the two lexicons'
scores.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .corpus import SequenceSlice
from .metrics import RecordMetrics
from .smoother import SmoothedSeries

FLAG_STATUSES = ("within_band", "above", "below")


@dataclass(frozen=True)
class SequenceSummary:
    index: int
    label: str
    n: int
    mean: float
    variance: float
    fit_min: float
    fit_max: float

    @property
    def amplitude(self) -> float:
        return self.fit_max - self.fit_min


@dataclass(frozen=True, slots=True)
class RecordFlag:
    record_id: int
    metric: str
    value: float
    fit: float
    lower: float
    upper: float
    status: str


@dataclass(frozen=True, slots=True)
class Extremum:
    sequence: int
    x: float
    fit: float
    kind: str  # "maximum" | "minimum"


@dataclass(frozen=True)
class AgreementReport:
    """Sign agreement between the two score series.

    ``agreement`` is None when undefined (no record has both scores
    nonzero under the default policy).
    """

    agreement: float | None
    compared: int
    sign_matches: int
    nrc_zero: int
    bing_zero: int
    zeros_as_agree: bool


def summarize_sequence(
    slice_: SequenceSlice, values: Sequence[float], series: SmoothedSeries
) -> SequenceSummary:
    """Plain mean/variance of the sequence values plus the fit range.

    Variance uses the population (n) divisor. ``values`` must be the
    series the fit was computed from.
    """
    if len(values) == 0:
        raise ValueError(f"sequence {slice_.index} has no values to summarize")
    arr = np.asarray(values, dtype=np.float64)
    return SequenceSummary(
        index=slice_.index,
        label=slice_.label,
        n=slice_.size,
        mean=float(arr.mean()),
        variance=float(arr.var()),
        fit_min=float(series.fit.min()),
        fit_max=float(series.fit.max()),
    )


def flag_records(
    record_ids: Sequence[int],
    values: Sequence[float],
    series: SmoothedSeries,
    metric: str,
    band: str = "ci",
    k_sigma: float = 2.0,
) -> list[RecordFlag]:
    """Classify each record against the band interpolated at its position.

    ``band`` selects the confidence band ("ci", default) or a local
    dispersion band fit +/- k_sigma * sqrt(cond_var) ("sigma").
    Comparison is strict: a value exactly on a bound is within the band.
    """
    xs = np.asarray(record_ids, dtype=np.float64)
    fit = np.interp(xs, series.eval_x, series.fit)
    if band == "ci":
        lower = np.interp(xs, series.eval_x, series.lower)
        upper = np.interp(xs, series.eval_x, series.upper)
    elif band == "sigma":
        sd = np.sqrt(np.interp(xs, series.eval_x, series.cond_var))
        lower = fit - k_sigma * sd
        upper = fit + k_sigma * sd
    else:
        raise ValueError(f'band must be "ci" or "sigma", got {band!r}')
    flags = []
    for rid, value, f, lo, up in zip(record_ids, values, fit, lower, upper):
        if value > up:
            status = "above"
        elif value < lo:
            status = "below"
        else:
            status = "within_band"
        flags.append(
            RecordFlag(
                record_id=int(rid),
                metric=metric,
                value=float(value),
                fit=float(f),
                lower=float(lo),
                upper=float(up),
                status=status,
            )
        )
    return flags


def find_extrema(series: SmoothedSeries, sequence: int = 0) -> list[Extremum]:
    """Interior local maxima/minima of the fit grid.

    A run of equal fit values counts once, reported at its first grid
    point; runs touching either endpoint are excluded, as are the
    endpoints themselves.
    """
    fit = series.fit
    x = series.eval_x
    m = fit.shape[0]
    extrema = []
    i = 0
    while i < m:
        j = i
        while j + 1 < m and fit[j + 1] == fit[i]:
            j += 1
        if i > 0 and j < m - 1:
            before, here, after = fit[i - 1], fit[i], fit[j + 1]
            if before < here and after < here:
                extrema.append(Extremum(sequence=sequence, x=float(x[i]), fit=float(here), kind="maximum"))
            elif before > here and after > here:
                extrema.append(Extremum(sequence=sequence, x=float(x[i]), fit=float(here), kind="minimum"))
        i = j + 1
    return extrema


def lexicon_agreement(
    metrics: Iterable[RecordMetrics], zeros_as_agree: bool = False
) -> AgreementReport:
    """Fraction of records whose two scores share a sign.

    By default only records with both scores nonzero are compared (sign
    is undefined at 0) and the agreement is None when no such record
    exists. With ``zeros_as_agree`` every record is compared and a zero
    on either side counts as agreeing.
    """
    compared = 0
    matches = 0
    nrc_zero = 0
    bing_zero = 0
    for m in metrics:
        if m.nrc_score == 0:
            nrc_zero += 1
        if m.bing_score == 0:
            bing_zero += 1
        if zeros_as_agree:
            compared += 1
            if m.nrc_score == 0 or m.bing_score == 0 or (m.nrc_score > 0) == (m.bing_score > 0):
                matches += 1
        elif m.nrc_score != 0 and m.bing_score != 0:
            compared += 1
            if (m.nrc_score > 0) == (m.bing_score > 0):
                matches += 1
    agreement = matches / compared if compared else None
    return AgreementReport(
        agreement=agreement,
        compared=compared,
        sign_matches=matches,
        nrc_zero=nrc_zero,
        bing_zero=bing_zero,
        zeros_as_agree=zeros_as_agree,
    )
