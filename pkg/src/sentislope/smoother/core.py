"""Smoothed conditional-mean slopes with pointwise confidence bands.

Given per-record metric values indexed by position, this module fits a
locally weighted polynomial at each evaluation point, yielding the
expected metric value conditional on position, a pointwise standard
error and confidence band for that estimate, and a local
conditional-variance series describing dispersion around the slope.

The windowed solve is delegated to a kernel module: a compiled extension
when built, otherwise the pure-NumPy twin. Both expose identical
semantics; see ``backend_name()``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import stats

from ..errors import SingularWindowError, SmoothingError

if os.environ.get("SENTISLOPE_BACKEND", "").lower() == "python":
    from . import _loesspy as _KERNEL

    _BACKEND_NAME = "python"
else:
    try:
        from . import _loessc as _KERNEL  # type: ignore[no-redef]

        _BACKEND_NAME = "cython"
    except ImportError:
        from . import _loesspy as _KERNEL  # type: ignore[no-redef]

        _BACKEND_NAME = "python"

DEGREES = (0, 1, 2)
ALL_X = "all-x"


def backend_name() -> str:
    """Name of the kernel backend selected at import ("cython" or "python")."""
    return _BACKEND_NAME


@dataclass(frozen=True, slots=True)
class SeriesPoint:
    """One observation: ``x`` is the conditioning position, ``y`` the metric."""

    x: float
    y: float


@dataclass(frozen=True)
class SmoothParams:
    """Smoothing configuration.

    span
        Fraction of the series in each local window, in (0, 1].
    degree
        Local polynomial degree, 0..2.
    ci_level
        Two-sided confidence level for the band, in (0, 1).
    grid
        Number of evenly spaced evaluation points, or "all-x" to
        evaluate at every data position.
    """

    span: float = 0.75
    degree: int = 2
    ci_level: float = 0.95
    grid: int | str = 80

    def __post_init__(self):
        if not 0.0 < self.span <= 1.0:
            raise ValueError(f"span must be in (0, 1], got {self.span}")
        if self.degree not in DEGREES:
            raise ValueError(f"degree must be one of {DEGREES}, got {self.degree}")
        if not 0.0 < self.ci_level < 1.0:
            raise ValueError(f"ci_level must be in (0, 1), got {self.ci_level}")
        if self.grid != ALL_X and (not isinstance(self.grid, int) or self.grid < 2):
            raise ValueError(f'grid must be an integer >= 2 or "{ALL_X}", got {self.grid!r}')


@dataclass(frozen=True)
class SmoothedSeries:
    """Fitted slope, band, and conditional variance over one sequence."""

    eval_x: np.ndarray = field(repr=False)
    fit: np.ndarray = field(repr=False)
    se: np.ndarray = field(repr=False)
    lower: np.ndarray = field(repr=False)
    upper: np.ndarray = field(repr=False)
    cond_var: np.ndarray = field(repr=False)
    params: SmoothParams
    seq_mean: float
    seq_var: float


def tricube_weight(u):
    """Tricube kernel: (1 - |u|^3)^3 for |u| < 1, else 0.

    Accepts scalars or arrays; the weight lives in [0, 1] with maximum 1
    at u = 0 and compact support at |u| = 1.
    """
    a = np.abs(np.asarray(u, dtype=np.float64))
    w = np.where(a < 1.0, (1.0 - a**3) ** 3, 0.0)
    return float(w) if w.ndim == 0 else w


def _series_arrays(points: Sequence[SeriesPoint]) -> tuple[np.ndarray, np.ndarray]:
    if len(points) == 0:
        raise SmoothingError("empty series")
    x = np.ascontiguousarray([p.x for p in points], dtype=np.float64)
    y = np.ascontiguousarray([p.y for p in points], dtype=np.float64)
    if np.any(np.diff(x) < 0):
        raise SmoothingError("series x values must be sorted ascending")
    return x, y


def _window_size(n: int, params: SmoothParams) -> int:
    q = min(n, math.ceil(params.span * n))
    if q < params.degree + 1:
        raise SmoothingError(
            f"window of {q} point(s) cannot support degree {params.degree}; "
            f"need ceil(span*n) >= {params.degree + 1}"
        )
    return q


def _degrees_of_freedom(n: int, params: SmoothParams) -> float:
    # Standard local-regression approximation of the residual df.
    return max(1.0, n - 1.25 * (params.degree + 1) / params.span)


def _fit_points(x, y, eval_x, q, degree):
    try:
        return _KERNEL.fit_points(x, y, eval_x, q, degree)
    except ArithmeticError as exc:
        x0 = _parse_singular_x0(exc)
        raise SingularWindowError(x0) from exc


def _parse_singular_x0(exc: ArithmeticError) -> float:
    text = str(exc)
    try:
        return float(text.rsplit("x0=", 1)[1])
    except (IndexError, ValueError):
        return math.nan


def residual_variance(points: Sequence[SeriesPoint], params: SmoothParams) -> float:
    """Global residual variance of the local fit evaluated at every x.

    Computed as sum(r^2) / df with df = max(1, n - 1.25*(degree+1)/span).
    This is the sigma^2 that scales pointwise standard errors.
    """
    x, y = _series_arrays(points)
    q = _window_size(x.shape[0], params)
    fit_all, _ = _fit_points(x, y, x, q, params.degree)
    return float(((y - fit_all) ** 2).sum() / _degrees_of_freedom(x.shape[0], params))


def local_fit(
    points: Sequence[SeriesPoint], x0: float, params: SmoothParams
) -> tuple[float, float]:
    """Fit value and standard error of the local polynomial at ``x0``.

    The window holds the ceil(span*n) points nearest x0 (ties toward
    smaller x), weighted by the tricube of distance scaled by the
    window's max distance. The standard error is sigma * ||l(x0)|| where
    l is the hat vector of the linear estimator and sigma^2 the global
    residual variance of the series.
    """
    x, y = _series_arrays(points)
    n = x.shape[0]
    q = _window_size(n, params)
    eval_x = np.ascontiguousarray([x0], dtype=np.float64)
    fit, ell2 = _fit_points(x, y, eval_x, q, params.degree)
    fit_all, _ = _fit_points(x, y, x, q, params.degree)
    sigma2 = float(((y - fit_all) ** 2).sum() / _degrees_of_freedom(n, params))
    return float(fit[0]), float(math.sqrt(sigma2 * ell2[0]))


def _nearest_grid_index(eval_x: np.ndarray, x: np.ndarray) -> np.ndarray:
    j = np.searchsorted(eval_x, x).clip(1, eval_x.shape[0] - 1)
    left_closer = np.abs(x - eval_x[j - 1]) <= np.abs(eval_x[j] - x)
    return np.where(left_closer, j - 1, j)


def smooth_series(points: Sequence[SeriesPoint], params: SmoothParams) -> SmoothedSeries:
    """Fit the conditional-mean slope of a series with its confidence band.

    The band at each grid point is fit +/- t * se at the configured
    confidence level, with Student-t df equal to the residual df. The
    conditional variance at a grid point is the tricube-weighted mean,
    over the same window as the fit, of squared residuals taken against
    the fit at each data point's nearest grid point.
    """
    x, y = _series_arrays(points)
    n = x.shape[0]
    if n < params.degree + 2:
        raise SmoothingError(f"need at least degree+2={params.degree + 2} points, got {n}")
    q = _window_size(n, params)

    fit_all, ell2_all = _fit_points(x, y, x, q, params.degree)
    if params.grid == ALL_X:
        eval_x = x.copy()
        fit, ell2 = fit_all, ell2_all
    else:
        eval_x = np.linspace(x[0], x[-1], int(params.grid))
        fit, ell2 = _fit_points(x, y, eval_x, q, params.degree)

    df = _degrees_of_freedom(n, params)
    sigma2 = float(((y - fit_all) ** 2).sum() / df)
    se = np.sqrt(sigma2 * ell2)
    t_quantile = float(stats.t.ppf((1.0 + params.ci_level) / 2.0, df))
    half_band = t_quantile * se

    nearest = _nearest_grid_index(eval_x, x)
    r2 = np.ascontiguousarray((y - fit[nearest]) ** 2)
    cond_var = _KERNEL.weighted_residual_mean(x, r2, eval_x, q)

    return SmoothedSeries(
        eval_x=eval_x,
        fit=fit,
        se=se,
        lower=fit - half_band,
        upper=fit + half_band,
        cond_var=np.asarray(cond_var),
        params=params,
        seq_mean=float(y.mean()),
        seq_var=float(y.var()),
    )


def _check_range(series: SmoothedSeries, x: float) -> None:
    if not series.eval_x[0] <= x <= series.eval_x[-1]:
        raise ValueError(
            f"x={x} outside fitted range [{series.eval_x[0]}, {series.eval_x[-1]}]"
        )


def conditional_mean_at(series: SmoothedSeries, x: float) -> float:
    """Fitted conditional mean at ``x`` by linear interpolation on the grid.

    Exact at grid points (hence everywhere when grid="all-x"); raises
    ValueError outside the fitted range.
    """
    _check_range(series, x)
    return float(np.interp(x, series.eval_x, series.fit))


def band_at(series: SmoothedSeries, x: float) -> tuple[float, float, float]:
    """(fit, lower, upper) interpolated at ``x``; errors outside the range."""
    _check_range(series, x)
    return (
        float(np.interp(x, series.eval_x, series.fit)),
        float(np.interp(x, series.eval_x, series.lower)),
        float(np.interp(x, series.eval_x, series.upper)),
    )
