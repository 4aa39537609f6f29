"""Symmetric tridiagonal eigenvalues by Sturm-sequence bisection."""
import numpy as np

from ._backend import kernels
from .errors import NumericalFailure

_SAFEMIN = np.finfo(float).tiny


def _prepare(diag, offdiag):
    d = np.ascontiguousarray(diag, dtype=np.float64)
    e = np.ascontiguousarray(offdiag, dtype=np.float64)
    if d.ndim != 1 or e.shape != (max(len(d) - 1, 0),):
        raise ValueError("offdiag must be one shorter than diag")
    if len(d) == 0:
        raise ValueError("empty matrix")
    if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
        raise NumericalFailure("non-finite matrix entry")
    e2 = np.ascontiguousarray(e * e)
    if len(e2) == 0:
        e2 = np.zeros(1)
    pivmin = _SAFEMIN * max(1.0, float(e2.max()))
    return d, e2, pivmin


def gershgorin_bounds(diag, offdiag):
    d = np.asarray(diag, dtype=float)
    e = np.abs(np.asarray(offdiag, dtype=float))
    radius = np.zeros_like(d)
    radius[:-1] += e
    radius[1:] += e
    return float(np.min(d - radius)), float(np.max(d + radius))


def sturm_count(diag, offdiag, x):
    """Number of eigenvalues of the matrix strictly less than ``x``."""
    d, e2, pivmin = _prepare(diag, offdiag)
    return int(kernels.sturm_count(d, e2, float(x), pivmin))


def eigvalsh_tridiagonal(diag, offdiag, indices, rel_tol=4e-16, max_iter=200):
    """Eigenvalues with the given ascending ranks (0-based).

    Parameters
    ----------
    diag : array_like, shape (n,)
    offdiag : array_like, shape (n - 1,)
    indices : sequence of int
        Ranks to compute; ``range(m)`` gives the ``m`` smallest.
    rel_tol : float
        Bisection stops once the bracket is below ``rel_tol * |lambda|``
        (or the floating-point resolution of the bracket).

    Returns
    -------
    ndarray
        Eigenvalues in the order of ``indices``.
    """
    d, e2, pivmin = _prepare(diag, offdiag)
    idx = np.ascontiguousarray(indices, dtype=np.int64)
    if np.any(idx < 0) or np.any(idx >= len(d)):
        raise IndexError("eigenvalue rank out of range")
    lo, hi = gershgorin_bounds(d, offdiag)
    span = max(abs(lo), abs(hi), 1.0)
    lo -= 2.0 * np.finfo(float).eps * span
    hi += 2.0 * np.finfo(float).eps * span
    abs_tol = 2.0 * pivmin
    values, iters = kernels.bisect_eigenvalues(
        d, e2, idx, lo, hi, rel_tol, abs_tol, pivmin, max_iter)
    values = np.asarray(values)
    if np.any(np.asarray(iters) >= max_iter) or not np.all(np.isfinite(values)):
        raise NumericalFailure("bisection did not close its bracket")
    return values
