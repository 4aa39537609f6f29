"""Closed-form energy levels and normalized radial wavefunctions."""
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from . import model
from .errors import LvoscError, NoBoundStates, TachyonicLevel
from .nu import NuInput
from .special import gauss_laguerre_nodes, laguerre, log_gamma

DEFAULT_QUADRATURE_NODES = 200


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    l: int
    k: float
    epsilon_plus: float
    epsilon_minus: float
    epsilon_squared: float
    tau: float
    scale: float
    tachyonic: bool = False


def _level(bg, fc, osc, qn, allow_tachyonic):
    tau, scale = model.confinement(bg, fc, osc, qn)
    base = osc.mass ** 2 + qn.k ** 2 + model.cornell_shift(osc) + model.lsv_shift(bg, fc)
    e2 = base + 2.0 * (2 * qn.n + 1 + tau) * scale
    if e2 < 0:
        if not allow_tachyonic:
            raise TachyonicLevel(f"epsilon^2 = {e2!r} < 0 for n={qn.n}, l={qn.l}")
        return EnergyLevel(qn.n, qn.l, qn.k, math.nan, math.nan, e2, tau, scale, True)
    eps = math.sqrt(e2)
    return EnergyLevel(qn.n, qn.l, qn.k, eps, -eps, e2, tau, scale)


def energy_coulomb(bg, fc, osc, qn, allow_tachyonic=False):
    """Levels for f(r) = b/r.

    eps^2 = M^2 + k^2 + 2 (2n + 1 + tau) Omega + g kappa1 c1 c2 + g kappa2 chi c2

    Raises NoBoundStates when Omega = 0. With ``allow_tachyonic`` a level with
    eps^2 < 0 is returned flagged (branches NaN) instead of raising.
    """
    if osc.is_cornell:
        raise model.InvalidParameter("Coulomb-type coupling required")
    return _level(bg, fc, osc, qn, allow_tachyonic)


def energy_cornell(bg, fc, osc, qn, allow_tachyonic=False):
    """Levels for f(r) = a r + b/r.

    eps^2 = M^2 + k^2 + 2 M omega a + 2 a b M^2 omega^2 + g kappa1 c1 c2
            + g kappa2 chi c2 + 2 (2n + 1 + tau) delta
    """
    if not osc.is_cornell:
        raise model.InvalidParameter("Cornell-type coupling required")
    return _level(bg, fc, osc, qn, allow_tachyonic)


def energy(bg, fc, osc, qn, allow_tachyonic=False):
    return _level(bg, fc, osc, qn, allow_tachyonic)


def spectral_constant(bg, fc, osc, qn):
    """The value of C (Pi or Lambda) that quantizes level ``qn.n``."""
    tau, scale = model.confinement(bg, fc, osc, qn)
    return 2.0 * scale * (2 * qn.n + 1 + tau)


def nu_input(coeffs):
    """Map radial coefficients onto the NU form via s = S r^2.

    alpha1 = 1, alpha2 = alpha3 = 0, xi1 = 1/4, xi2 = C / (4 S), xi3 = tau^2 / 4.
    """
    return NuInput(alpha1=1.0, alpha2=0.0, alpha3=0.0, xi1=0.25,
                   xi2=coeffs.constant / (4.0 * coeffs.scale),
                   xi3=coeffs.tau ** 2 / 4.0)


@dataclass(frozen=True)
class RadialWavefunction:
    """psi(r) = norm * s^(tau/2) exp(-s/2) L_n^(tau)(s), s = scale * r^2."""

    scale: float
    tau: float
    n: int
    norm: float

    @classmethod
    def build(cls, scale, tau, n):
        # norm^2 = 2 scale n! / Gamma(n + tau + 1)
        log_norm = 0.5 * (math.log(2.0 * scale) + log_gamma(n + 1.0)
                          - log_gamma(n + tau + 1.0))
        return cls(scale=scale, tau=tau, n=n, norm=math.exp(log_norm))

    def of_s(self, s):
        s = np.asarray(s, dtype=float)
        return self.norm * self._envelope(s) * laguerre(self.n, self.tau, s)

    def _envelope(self, s):
        # s^(tau/2) e^(-s/2), computed in log space to survive large tau
        with np.errstate(divide="ignore", invalid="ignore"):
            logs = np.where(s > 0, 0.5 * self.tau * np.log(np.where(s > 0, s, 1.0)) - 0.5 * s, 0.0)
        env = np.exp(logs)
        if self.tau > 0:
            env = np.where(s > 0, env, 0.0)
        return env

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        out = self.of_s(self.scale * r * r)
        return float(out) if out.ndim == 0 else out

    def derivatives(self, r):
        """(psi, dpsi/dr, d2psi/dr2) at ``r > 0`` from the analytic form."""
        r = np.asarray(r, dtype=float)
        S, tau, n = self.scale, self.tau, self.n
        s = S * r * r
        lag = laguerre(n, tau, s)
        # d/ds L_n^(t) = -L_{n-1}^(t+1), d2/ds2 = L_{n-2}^(t+2)
        d1 = -laguerre(n - 1, tau + 1.0, s) if n >= 1 else np.zeros_like(s)
        d2 = laguerre(n - 2, tau + 2.0, s) if n >= 2 else np.zeros_like(s)
        base = self.norm * self._envelope(s)
        p = 0.5 * tau
        g = p / s - 0.5
        phi = base * lag
        phi_s = base * (g * lag + d1)
        phi_ss = base * ((g * g - p / (s * s)) * lag + 2.0 * g * d1 + d2)
        dpsi = phi_s * 2.0 * S * r
        d2psi = 2.0 * S * (2.0 * s * phi_ss + phi_s)
        return phi, dpsi, d2psi

    def normalization(self, count=DEFAULT_QUADRATURE_NODES):
        """Integral of r |psi|^2 over [0, inf) by Gauss-Laguerre quadrature."""
        nodes, weights = gauss_laguerre_nodes(count, self.tau)
        lag = laguerre(self.n, self.tau, nodes)
        return float(self.norm ** 2 / (2.0 * self.scale) * np.dot(weights, lag * lag))


def overlap(psi_a, psi_b, count=DEFAULT_QUADRATURE_NODES):
    """Integral of r psi_a psi_b dr for wavefunctions sharing (scale, tau)."""
    if psi_a.scale != psi_b.scale or psi_a.tau != psi_b.tau:
        raise ValueError("overlap needs a common scale and tau")
    nodes, weights = gauss_laguerre_nodes(count, psi_a.tau)
    la = laguerre(psi_a.n, psi_a.tau, nodes)
    lb = laguerre(psi_b.n, psi_b.tau, nodes)
    return float(psi_a.norm * psi_b.norm / (2.0 * psi_a.scale) * np.dot(weights, la * lb))


def wavefunction(bg, fc, osc, qn):
    """Normalized radial wavefunction of level ``qn`` (scale = Omega or delta)."""
    tau, scale = model.confinement(bg, fc, osc, qn)
    return RadialWavefunction.build(scale, tau, qn.n)


def ode_residual(bg, fc, osc, qn, r, epsilon_squared=None):
    """psi'' + psi'/r + (C - tau^2/r^2 - S^2 r^2) psi at radius ``r``.

    Uses the quantized energy unless ``epsilon_squared`` is given.
    """
    psi_fn = wavefunction(bg, fc, osc, qn)
    if epsilon_squared is None:
        epsilon_squared = energy(bg, fc, osc, qn, allow_tachyonic=True).epsilon_squared
    coeffs = model.derive_coefficients(bg, fc, osc, qn, epsilon_squared=epsilon_squared)
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise model.InvalidParameter("r must be > 0")
    psi, d1, d2 = psi_fn.derivatives(r)
    S, tau = coeffs.scale, coeffs.tau
    res = d2 + d1 / r + (coeffs.constant - tau * tau / (r * r) - S * S * r * r) * psi
    return float(res) if res.ndim == 0 else res


def scaled_ode_residual(bg, fc, osc, qn, r):
    """|residual| / max(1, |psi''|) at the quantized energy."""
    res = ode_residual(bg, fc, osc, qn, r)
    _, _, d2 = wavefunction(bg, fc, osc, qn).derivatives(np.asarray(r, dtype=float))
    return np.abs(res) / np.maximum(1.0, np.abs(d2))


# -- limit checks -----------------------------------------------------------

@dataclass(frozen=True)
class LimitReport:
    chi_grid: tuple
    epsilon: tuple
    status: tuple
    monotone_claimed: bool
    monotone: Optional[bool]
    continuity_gap: Optional[float]
    classification: str
    chi_eps: float = 1e-8

    @property
    def ok(self):
        mono_ok = self.monotone is not False if self.monotone_claimed else True
        cont_ok = self.continuity_gap is None or self.continuity_gap <= 1e-10
        return mono_ok and cont_ok


def classify_without_lsv(bg, fc, osc, qn):
    """Regime of the problem with kappa1 = kappa2 = 0.

    Returns "NoBoundStates" (Bessel-type), "NoConfinement", "Oscillator",
    or the error code of an invalid scenario.
    """
    bare = model.without_lsv(bg)
    try:
        model.confinement(bare, fc, osc, qn)
    except NoBoundStates as exc:
        return "NoConfinement" if osc.is_cornell else exc.code
    except LvoscError as exc:
        return exc.code
    return "Oscillator"


def limit_checks(bg, fc, osc, qn, chi_max=2.0, points=41, chi_eps=1e-8):
    """Check the chi -> 0 limit, chi-monotonicity, and the LSV-free regime.

    Monotone non-decrease of eps_+ in chi is only asserted when g, c1,
    kappa2 and c2 are all >= 0; otherwise ``monotone_claimed`` is False and
    the grid is reported as-is.
    """
    grid = np.linspace(0.0, chi_max, points)
    eps, status = [], []
    for chi in grid:
        try:
            lvl = energy(bg, replace(fc, chi=float(chi)), osc, qn)
            eps.append(lvl.epsilon_plus)
            status.append("ok")
        except LvoscError as exc:
            eps.append(math.nan)
            status.append(exc.code)
    claimed = bg.g >= 0 and fc.c1 >= 0 and bg.kappa2 >= 0 and fc.c2 >= 0
    finite = [e for e, st in zip(eps, status) if st == "ok"]
    monotone = None
    if finite:
        monotone = all(b >= a for a, b in zip(finite, finite[1:]))
    gap = None
    try:
        e0 = energy(bg, replace(fc, chi=0.0), osc, qn).epsilon_plus
        e1 = energy(bg, replace(fc, chi=chi_eps), osc, qn).epsilon_plus
        e2 = energy(bg, replace(fc, chi=2.0 * chi_eps), osc, qn).epsilon_plus
        # one-sided limit with the O(chi) slope extrapolated away
        gap = abs((2.0 * e1 - e2) - e0)
    except LvoscError:
        pass
    return LimitReport(
        chi_grid=tuple(float(c) for c in grid),
        epsilon=tuple(eps),
        status=tuple(status),
        monotone_claimed=claimed,
        monotone=monotone,
        continuity_gap=gap,
        classification=classify_without_lsv(bg, fc, osc, qn),
        chi_eps=chi_eps,
    )
