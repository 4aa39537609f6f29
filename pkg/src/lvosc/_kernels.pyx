# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: Sturm counting, bisection, Laguerre recurrence.

Mirrors ``_kernels_py`` function for function.
"""
import numpy as np

from libc.math cimport fabs, fmax


cdef Py_ssize_t _count(const double[::1] d, const double[::1] e2,
                       double x, double pivmin) noexcept nogil:
    cdef Py_ssize_t i, n = d.shape[0], neg = 0
    cdef double q = d[0] - x
    if fabs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        neg += 1
    for i in range(1, n):
        q = d[i] - x - e2[i - 1] / q
        if fabs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            neg += 1
    return neg


def sturm_count(const double[::1] d, const double[::1] e2, double x, double pivmin):
    """Number of eigenvalues strictly below ``x``."""
    return _count(d, e2, x, pivmin)


def bisect_eigenvalues(const double[::1] d, const double[::1] e2,
                       const long[::1] indices, double lower, double upper,
                       double rel_tol, double abs_tol, double pivmin,
                       int max_iter):
    """Bisect for the eigenvalues with the given ascending ranks.

    Returns ``(values, iterations)``; ``iterations[j] == max_iter`` flags a
    bracket that never closed.
    """
    cdef Py_ssize_t j, m = indices.shape[0]
    cdef long target
    cdef int it
    cdef double lo, hi, mid
    out = np.empty(m, dtype=np.float64)
    iters = np.empty(m, dtype=np.int64)
    cdef double[::1] out_v = out
    cdef long[::1] it_v = iters
    with nogil:
        for j in range(m):
            target = indices[j]
            lo = lower
            hi = upper
            it = 0
            while it < max_iter:
                if hi - lo <= fmax(abs_tol, rel_tol * fmax(fabs(lo), fabs(hi))):
                    break
                mid = 0.5 * (lo + hi)
                if mid <= lo or mid >= hi:
                    break
                if _count(d, e2, mid, pivmin) > target:
                    hi = mid
                else:
                    lo = mid
                it += 1
            out_v[j] = 0.5 * (lo + hi)
            it_v[j] = it
    return out, iters


def laguerre_array(long n, double tau, const double[::1] s):
    """L_n^(tau)(s) by the ascending three-term recurrence."""
    cdef Py_ssize_t i, npts = s.shape[0]
    cdef long k
    cdef double prev, cur, nxt, x
    out = np.empty(npts, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(npts):
            x = s[i]
            if n == 0:
                o[i] = 1.0
                continue
            prev = 1.0
            cur = 1.0 + tau - x
            for k in range(1, n):
                nxt = ((2 * k + 1 + tau - x) * cur - (k + tau) * prev) / (k + 1)
                prev = cur
                cur = nxt
            o[i] = cur
    return out
