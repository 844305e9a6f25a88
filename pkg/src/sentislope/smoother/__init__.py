"""Local-regression smoothing of per-record metric series.

The hot windowed-solve kernels live in a compiled extension
(:mod:`._loessc`) with a pure-NumPy twin (:mod:`._loesspy`) selected at
import when the extension is absent or ``SENTISLOPE_BACKEND=python`` is
set. ``benchmarks/bench_smoother.py`` compares the two.
"""

from .core import (
    ALL_X,
    SeriesPoint,
    SmoothedSeries,
    SmoothParams,
    backend_name,
    band_at,
    conditional_mean_at,
    local_fit,
    residual_variance,
    smooth_series,
    tricube_weight,
)

__all__ = [
    "ALL_X",
    "SeriesPoint",
    "SmoothedSeries",
    "SmoothParams",
    "backend_name",
    "band_at",
    "conditional_mean_at",
    "local_fit",
    "residual_variance",
    "smooth_series",
    "tricube_weight",
]
