# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled local weighted least-squares kernels.

Same contract as the pure fallback (see _loesspy): q-nearest windows with
ties toward smaller x, tricube weights scaled by the window's max
distance, a centered and distance-scaled polynomial basis, and a
partially pivoted solve of the small normal system that raises
ArithmeticError on singular windows.
"""

from libc.math cimport fabs

import numpy as np

DEF PIVOT_RTOL = 1e-12


cdef inline Py_ssize_t _advance(const double[::1] x, double e, Py_ssize_t q,
                                Py_ssize_t lo, Py_ssize_t n) noexcept nogil:
    while lo + q < n and (x[lo + q] - e) < (e - x[lo]):
        lo += 1
    return lo


def fit_points(const double[::1] x, const double[::1] y,
               const double[::1] eval_x, Py_ssize_t q, int degree):
    """Local polynomial fit and squared hat-vector norm at each eval point."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t m = eval_x.shape[0]
    cdef int p = degree + 1
    fit_arr = np.empty(m, dtype=np.float64)
    ell2_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] fit = fit_arr
    cdef double[::1] ell2 = ell2_arr
    cdef Py_ssize_t lo = 0, i, j
    cdef int a, b, col, r, piv, k
    cdef double e, d0, d1, dmax, s, u, t, w, sk, li, accf, accl2
    cdef double amax, big, f, inv
    cdef double P[5]
    cdef double M[3][4]
    cdef double c[3]

    for j in range(m):
        e = eval_x[j]
        lo = _advance(x, e, q, lo, n)
        d0 = fabs(x[lo] - e)
        d1 = fabs(x[lo + q - 1] - e)
        dmax = d0 if d0 > d1 else d1

        for k in range(2 * degree + 1):
            P[k] = 0.0
        for i in range(lo, lo + q):
            s = (x[i] - e) / dmax if dmax > 0.0 else 0.0
            u = fabs(s)
            t = 1.0 - u * u * u
            w = t * t * t
            sk = 1.0
            for k in range(2 * degree + 1):
                P[k] += w * sk
                sk *= s

        amax = 0.0
        for a in range(p):
            for b in range(p):
                M[a][b] = P[a + b]
                if fabs(P[a + b]) > amax:
                    amax = fabs(P[a + b])
            M[a][p] = 1.0 if a == 0 else 0.0

        for col in range(p):
            piv = col
            big = fabs(M[col][col])
            for r in range(col + 1, p):
                if fabs(M[r][col]) > big:
                    big = fabs(M[r][col])
                    piv = r
            if big <= amax * PIVOT_RTOL:
                raise ArithmeticError(f"singular local window at x0={e!r}")
            if piv != col:
                for b in range(p + 1):
                    f = M[col][b]
                    M[col][b] = M[piv][b]
                    M[piv][b] = f
            inv = 1.0 / M[col][col]
            for r in range(col + 1, p):
                f = M[r][col] * inv
                if f != 0.0:
                    for b in range(col, p + 1):
                        M[r][b] -= f * M[col][b]

        c[0] = c[1] = c[2] = 0.0
        for r in range(p - 1, -1, -1):
            f = M[r][p]
            for b in range(r + 1, p):
                f -= M[r][b] * c[b]
            c[r] = f / M[r][r]

        accf = 0.0
        accl2 = 0.0
        for i in range(lo, lo + q):
            s = (x[i] - e) / dmax if dmax > 0.0 else 0.0
            u = fabs(s)
            t = 1.0 - u * u * u
            w = t * t * t
            li = w * (c[0] + s * (c[1] + s * c[2]))
            accf += li * y[i]
            accl2 += li * li
        fit[j] = accf
        ell2[j] = accl2

    return fit_arr, ell2_arr


def weighted_residual_mean(const double[::1] x, const double[::1] r2,
                           const double[::1] eval_x, Py_ssize_t q):
    """Tricube-weighted mean of r2 within each eval point's window."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t m = eval_x.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t lo = 0, i, j
    cdef double e, d0, d1, dmax, s, u, t, w, wsum, acc

    for j in range(m):
        e = eval_x[j]
        lo = _advance(x, e, q, lo, n)
        d0 = fabs(x[lo] - e)
        d1 = fabs(x[lo + q - 1] - e)
        dmax = d0 if d0 > d1 else d1
        wsum = 0.0
        acc = 0.0
        for i in range(lo, lo + q):
            s = (x[i] - e) / dmax if dmax > 0.0 else 0.0
            u = fabs(s)
            t = 1.0 - u * u * u
            w = t * t * t
            wsum += w
            acc += w * r2[i]
        out[j] = acc / wsum if wsum > 0.0 else 0.0

    return out_arr
