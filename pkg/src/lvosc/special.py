"""Log-gamma, generalized Laguerre polynomials, Gauss-Laguerre quadrature."""
import math
from functools import lru_cache

import numpy as np

from ._backend import kernels
from .errors import ConvergenceError, DomainError
from .tridiag import eigvalsh_tridiagonal

_EULER_GAMMA = 0.57721566490153286061
_HALF_LOG_2PI = 0.91893853320467274178

# Bernoulli numbers B_2 .. B_16
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6,
              -3617 / 510)


def _zeta_minus_one(s, cutoff=10):
    """zeta(s) - 1 for integer s >= 2 by Euler-Maclaurin summation."""
    total = sum(j ** -float(s) for j in range(2, cutoff))
    n = float(cutoff)
    total += n ** (1 - s) / (s - 1) + 0.5 * n ** -s
    rising = float(s)
    power = n ** (-s - 1)
    for i, b in enumerate(_BERNOULLI[:6], start=1):
        total += b / math.factorial(2 * i) * rising * power
        rising *= (s + 2 * i - 1) * (s + 2 * i)
        power /= n * n
    return total


# lnGamma(2 + z) = (1 - gamma) z + sum_k (-1)^k (zeta(k) - 1) / k z^k
_SERIES = tuple((-1) ** k * _zeta_minus_one(k) / k for k in range(2, 48))


def _lgamma_near_two(z):
    acc = 0.0
    for c in reversed(_SERIES):
        acc = acc * z + c
    return z * ((1.0 - _EULER_GAMMA) + z * acc)


def _lgamma_stirling(x):
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for i in range(len(_BERNOULLI), 0, -1):
        corr = corr * inv2 + _BERNOULLI[i - 1] / (2 * i * (2 * i - 1))
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + corr * inv


def log_gamma(x):
    """Natural log of the gamma function for ``x > 0``.

    Accurate to a few ulps relative, including near the zeros at 1 and 2.
    """
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError(f"log_gamma requires finite x > 0, got {x!r}")
    if x < 0.5:
        return log_gamma(x + 1.0) - math.log(x)
    if x < 1.5:
        return _lgamma_near_two(x - 1.0) - math.log1p(x - 1.0)
    if x <= 2.5:
        return _lgamma_near_two(x - 2.0)
    if x < 12.0:
        shift = math.ceil(x - 2.5)
        base = x - shift
        prod = 1.0
        for i in range(shift):
            prod *= base + i
        return _lgamma_near_two(base - 2.0) + math.log(prod)
    return _lgamma_stirling(x)


def _check_order(n, tau):
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    if not tau > -1.0 or not math.isfinite(tau):
        raise DomainError(f"order tau must be finite and > -1, got {tau!r}")


def laguerre(n, tau, s):
    """Generalized Laguerre polynomial ``L_n^(tau)(s)``.

    Evaluated with the ascending recurrence
    ``(k+1) L_{k+1} = (2k+1+tau-s) L_k - (k+tau) L_{k-1}``.
    Accepts a scalar or an array for ``s``.
    """
    _check_order(n, tau)
    arr = np.asarray(s, dtype=np.float64)
    if np.any(arr < 0.0) or not np.all(np.isfinite(arr)):
        raise DomainError("laguerre requires finite s >= 0")
    out = np.asarray(kernels.laguerre_array(int(n), float(tau),
                                            np.ascontiguousarray(arr.ravel())))
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def _laguerre_pair_scaled(n, tau, x):
    # L_n and L_{n-1} up to a common positive factor, safe from overflow
    prev = np.ones_like(x)
    cur = 1.0 + tau - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + tau - x) * cur - (k + tau) * prev) / (k + 1)
        big = np.abs(cur) > 1e200
        if big.any():
            prev = np.where(big, prev * 1e-200, prev)
            cur = np.where(big, cur * 1e-200, cur)
    return cur, prev


def _log_sum_orthonormal_squares(count, tau, x):
    # log sum_{k<count} p_k(x)^2 for the orthonormal Laguerre family, p_0 = 1
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    total = np.ones_like(x)
    log_scale = np.zeros_like(x)
    for k in range(count - 1):
        b_next = math.sqrt((k + 1) * (k + 1 + tau))
        b_cur = math.sqrt(k * (k + tau)) if k > 0 else 0.0
        p_prev, p = p, ((x - (2 * k + 1 + tau)) * p - b_cur * p_prev) / b_next
        total = total + p * p
        big = total > 1e200
        if big.any():
            p = np.where(big, p * 1e-100, p)
            p_prev = np.where(big, p_prev * 1e-100, p_prev)
            total = np.where(big, total * 1e-200, total)
            log_scale = log_scale + np.where(big, 200.0 * math.log(10.0), 0.0)
    return np.log(total) + log_scale


@lru_cache(maxsize=256)
def _gauss_laguerre(count, tau):
    k = np.arange(count, dtype=float)
    diag = 2.0 * k + 1.0 + tau
    off = np.sqrt(k[1:] * (k[1:] + tau))
    nodes = eigvalsh_tridiagonal(diag, off, range(count))
    if count > 1:
        # Newton polish on L_count; the bisected nodes carry absolute error
        # ~ eps * ||J||, which is large relative to the smallest nodes
        for _ in range(3):
            ln, lnm1 = _laguerre_pair_scaled(count, tau, nodes)
            denom = count * ln - (count + tau) * lnm1
            step = nodes * ln / denom
            ok = np.isfinite(step) & (np.abs(step) < 1e-6 * nodes)
            nodes = np.where(ok, nodes - step, nodes)
    if not np.all(np.isfinite(nodes)) or np.any(np.diff(nodes) <= 0) or nodes[0] <= 0:
        raise ConvergenceError(f"node search failed for count={count}, tau={tau}")
    log_w = log_gamma(tau + 1.0) - _log_sum_orthonormal_squares(count, tau, nodes)
    weights = np.exp(log_w)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_laguerre_nodes(count, tau=0.0):
    """Gauss quadrature rule for the weight ``s**tau * exp(-s)`` on [0, inf).

    Parameters
    ----------
    count : int
        Number of nodes; the rule is exact for polynomials of degree
        ``2 * count - 1``.
    tau : float
        Weight exponent, ``tau > -1``.

    Returns
    -------
    nodes, weights : ndarray
        Read-only arrays of length ``count``; ``weights.sum()`` equals
        ``Gamma(tau + 1)``.
    """
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    _check_order(0, tau)
    return _gauss_laguerre(int(count), float(tau))
