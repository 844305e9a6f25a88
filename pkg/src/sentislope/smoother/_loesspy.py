"""Pure-NumPy local weighted least-squares kernels.

Fallback used when the compiled extension is unavailable. Both kernels
implement the same contract:

* windows are the ``q`` nearest data points to each evaluation point by
  absolute distance, ties resolved toward smaller x;
* weights are tricube in distance scaled by the window's max distance;
* the polynomial basis is centered at the evaluation point and scaled by
  the max distance, which leaves the fitted value and the hat vector
  unchanged while keeping the normal matrix well conditioned;
* the (degree+1)^2 normal system is solved by Gaussian elimination with
  partial pivoting, and a pivot below 1e-12 of the matrix magnitude
  raises ArithmeticError rather than regularizing.

Inputs must be float64, C-contiguous, with ``x`` and ``eval_x`` sorted
ascending (ties in ``x`` are allowed).
"""

from __future__ import annotations

import numpy as np

_PIVOT_RTOL = 1e-12


def _window_start(x: np.ndarray, e: float, q: int, lo: int) -> int:
    n = x.shape[0]
    while lo + q < n and (x[lo + q] - e) < (e - x[lo]):
        lo += 1
    return lo


def _window_weights(xs: np.ndarray, e: float) -> tuple[np.ndarray, np.ndarray]:
    """Scaled offsets and tricube weights for one contiguous window."""
    d0 = abs(xs[0] - e)
    d1 = abs(xs[-1] - e)
    dmax = d0 if d0 > d1 else d1
    if dmax > 0.0:
        s = (xs - e) / dmax
    else:
        s = np.zeros_like(xs)
    u = np.abs(s)
    t = 1.0 - u * u * u
    return s, t * t * t


def _solve_unit_rhs(A: list[list[float]], p: int, e: float) -> list[float]:
    """Solve A c = e1 by partially pivoted elimination; raise if singular."""
    amax = max(abs(A[r][c]) for r in range(p) for c in range(p))
    M = [A[r][:p] + [1.0 if r == 0 else 0.0] for r in range(p)]
    for col in range(p):
        piv = col
        big = abs(M[col][col])
        for r in range(col + 1, p):
            if abs(M[r][col]) > big:
                big = abs(M[r][col])
                piv = r
        if big <= amax * _PIVOT_RTOL:
            raise ArithmeticError(f"singular local window at x0={e!r}")
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
        inv = 1.0 / M[col][col]
        for r in range(col + 1, p):
            f = M[r][col] * inv
            if f != 0.0:
                for c2 in range(col, p + 1):
                    M[r][c2] -= f * M[col][c2]
    c = [0.0, 0.0, 0.0]
    for r in range(p - 1, -1, -1):
        acc = M[r][p]
        for c2 in range(r + 1, p):
            acc -= M[r][c2] * c[c2]
        c[r] = acc / M[r][r]
    return c


def fit_points(
    x: np.ndarray, y: np.ndarray, eval_x: np.ndarray, q: int, degree: int
) -> tuple[np.ndarray, np.ndarray]:
    """Local polynomial fit and squared hat-vector norm at each eval point.

    Returns (fit, ell2) where fit[j] is the weighted least-squares
    polynomial evaluated at eval_x[j] and ell2[j] is the sum of squared
    weights of the linear estimator l(eval_x[j]) such that
    fit[j] = sum_i l_i * y[i].
    """
    m = eval_x.shape[0]
    fit = np.empty(m)
    ell2 = np.empty(m)
    lo = 0
    for j in range(m):
        e = float(eval_x[j])
        lo = _window_start(x, e, q, lo)
        xs = x[lo : lo + q]
        s, w = _window_weights(xs, e)
        A = [[0.0] * 3 for _ in range(3)]
        powers = [float(np.dot(w, s**k)) if k else float(w.sum()) for k in range(2 * degree + 1)]
        p = degree + 1
        for a in range(p):
            for b in range(p):
                A[a][b] = powers[a + b]
        c = _solve_unit_rhs(A, p, e)
        li = w * (c[0] + s * (c[1] + s * c[2]))
        fit[j] = float(np.dot(li, y[lo : lo + q]))
        ell2[j] = float(np.dot(li, li))
    return fit, ell2


def weighted_residual_mean(
    x: np.ndarray, r2: np.ndarray, eval_x: np.ndarray, q: int
) -> np.ndarray:
    """Tricube-weighted mean of r2 within each eval point's window."""
    m = eval_x.shape[0]
    out = np.empty(m)
    lo = 0
    for j in range(m):
        e = float(eval_x[j])
        lo = _window_start(x, e, q, lo)
        _, w = _window_weights(x[lo : lo + q], e)
        wsum = float(w.sum())
        out[j] = float(np.dot(w, r2[lo : lo + q])) / wsum if wsum > 0.0 else 0.0
    return out
