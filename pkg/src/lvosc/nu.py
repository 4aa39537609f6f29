"""Parametric Nikiforov-Uvarov method.

Handles equations of the form

    psi'' + (a1 - a2 s) / (s (1 - a3 s)) psi'
          + (-xi1 s^2 + xi2 s - xi3) / (s^2 (1 - a3 s)^2) psi = 0.

The quantization condition is implemented for any ``alpha3``; eigenfunctions
only for ``alpha3 == 0``, where the Jacobi polynomial degenerates into a
generalized Laguerre polynomial.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InvalidParameter, NegativeDiscriminant, Unsupported
from .special import laguerre


@dataclass(frozen=True)
class NuInput:
    alpha1: float
    alpha2: float
    alpha3: float
    xi1: float
    xi2: float
    xi3: float

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "alpha3", "xi1", "xi2", "xi3"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise InvalidParameter(f"{name} must be finite, got {v!r}")
        if not self.xi1 > 0:
            raise InvalidParameter(f"xi1 must be > 0 for bound states, got {self.xi1!r}")


@dataclass(frozen=True)
class NuDerived:
    alpha4: float
    alpha5: float
    alpha6: float
    alpha7: float
    alpha8: float
    alpha9: float
    alpha10: float
    alpha11: float
    alpha12: float
    alpha13: float


def derive_alphas(inp):
    """Derived parameters alpha4..alpha13 of the parametric NU method.

    Raises NegativeDiscriminant if alpha8 or alpha9 is negative.
    """
    a1, a2, a3 = inp.alpha1, inp.alpha2, inp.alpha3
    a4 = 0.5 * (1.0 - a1)
    a5 = 0.5 * (a2 - 2.0 * a3)
    a6 = a5 * a5 + inp.xi1
    a7 = 2.0 * a4 * a5 - inp.xi2
    a8 = a4 * a4 + inp.xi3
    a9 = a6 + a3 * a7 + a3 * a3 * a8
    if a8 < 0:
        raise NegativeDiscriminant("alpha8", a8)
    if a9 < 0:
        raise NegativeDiscriminant("alpha9", a9)
    r8, r9 = math.sqrt(a8), math.sqrt(a9)
    return NuDerived(
        alpha4=a4,
        alpha5=a5,
        alpha6=a6,
        alpha7=a7,
        alpha8=a8,
        alpha9=a9,
        alpha10=a1 + 2.0 * a4 + 2.0 * r8,
        alpha11=a2 - 2.0 * a5 + 2.0 * (r9 + a3 * r8),
        alpha12=a4 + r8,
        alpha13=a5 - (r9 + a3 * r8),
    )


def quantization_residual(inp, derived, n):
    """Left-hand side of the NU eigenvalue equation for level ``n``.

    Zero when the energy hidden in ``inp`` (usually through xi2) is the
    n-th eigenvalue.
    """
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise InvalidParameter(f"n must be a non-negative integer, got {n!r}")
    a3 = inp.alpha3
    d = derived
    r8, r9 = math.sqrt(d.alpha8), math.sqrt(d.alpha9)
    return (inp.alpha2 * n
            - (2 * n + 1) * d.alpha5
            + (2 * n + 1) * (r9 + a3 * r8)
            + n * (n - 1) * a3
            + d.alpha7
            + 2.0 * a3 * d.alpha8
            + 2.0 * math.sqrt(d.alpha8 * d.alpha9))


def residual_at(make_input, n, x):
    """quantization_residual of ``make_input(x)``."""
    inp = make_input(x)
    return quantization_residual(inp, derive_alphas(inp), n)


def solve_quantization(make_input, n, lower, upper, rtol=1e-12, max_iter=400):
    """Root in ``x`` of the quantization condition by bisection.

    ``make_input`` maps the energy-like unknown to a NuInput. The bracket
    ``[lower, upper]`` must straddle a sign change.
    """
    lo, hi = float(lower), float(upper)
    f_lo = residual_at(make_input, n, lo)
    f_hi = residual_at(make_input, n, hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise ConvergenceError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rtol * max(abs(lo), abs(hi)) or mid in (lo, hi):
            return mid
        f_mid = residual_at(make_input, n, mid)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    raise ConvergenceError("bisection did not converge")


def eigenfunction_alpha3_zero(inp, derived, n, s):
    """Unnormalized s^a12 exp(a13 s) L_n^(a10 - 1)(a11 s) for alpha3 = 0."""
    if inp.alpha3 != 0:
        raise Unsupported("Jacobi-polynomial eigenfunctions (alpha3 != 0) are not implemented")
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise InvalidParameter("s must be >= 0")
    d = derived
    lag = laguerre(n, d.alpha10 - 1.0, d.alpha11 * s)
    with np.errstate(divide="ignore"):
        power = np.where(s > 0, s ** d.alpha12, 1.0 if d.alpha12 == 0 else 0.0)
    out = power * np.exp(d.alpha13 * s) * lag
    return float(out) if out.ndim == 0 else out
