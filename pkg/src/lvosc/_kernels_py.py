"""Pure-Python/numpy versions of the compiled kernels in ``_kernels.pyx``."""
import numpy as np


def sturm_count(d, e2, x, pivmin):
    """Number of eigenvalues strictly below ``x``."""
    neg = 0
    q = d[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        neg += 1
    for i in range(1, len(d)):
        q = d[i] - x - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            neg += 1
    return neg


def _counts(d, e2, xs, pivmin):
    # one sweep down the matrix, all shifts at once
    q = d[0] - xs
    q[np.abs(q) < pivmin] = -pivmin
    neg = (q < 0.0).astype(np.int64)
    for i in range(1, len(d)):
        q = (d[i] - xs) - e2[i - 1] / q
        q[np.abs(q) < pivmin] = -pivmin
        neg += q < 0.0
    return neg


def bisect_eigenvalues(d, e2, indices, lower, upper, rel_tol, abs_tol, pivmin,
                       max_iter):
    indices = np.asarray(indices, dtype=np.int64)
    m = len(indices)
    lo = np.full(m, float(lower))
    hi = np.full(m, float(upper))
    iters = np.zeros(m, dtype=np.int64)
    active = np.ones(m, dtype=bool)
    for _ in range(max_iter):
        width = hi - lo
        tol = np.maximum(abs_tol, rel_tol * np.maximum(np.abs(lo), np.abs(hi)))
        mid = 0.5 * (lo + hi)
        active &= (width > tol) & (mid > lo) & (mid < hi)
        if not active.any():
            break
        idx = np.flatnonzero(active)
        above = _counts(d, e2, mid[idx].copy(), pivmin) > indices[idx]
        hi[idx[above]] = mid[idx[above]]
        lo[idx[~above]] = mid[idx[~above]]
        iters[idx] += 1
    return 0.5 * (lo + hi), iters


def laguerre_array(n, tau, s):
    """L_n^(tau)(s) by the ascending three-term recurrence."""
    s = np.asarray(s, dtype=np.float64)
    if n == 0:
        return np.ones_like(s)
    prev = np.ones_like(s)
    cur = 1.0 + tau - s
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + tau - s) * cur - (k + tau) * prev) / (k + 1)
    return cur
