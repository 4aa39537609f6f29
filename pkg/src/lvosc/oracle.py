"""Finite-difference verification of the radial spectrum.

With psi = u / sqrt(r) the radial equation becomes the Liouville problem

    -u'' + [(tau^2 - 1/4) / r^2 + S^2 r^2] u = C u

discretized by central differences on a uniform grid with Dirichlet ends.
Its lowest eigenvalues are found by Sturm-sequence bisection. Nothing in
this module uses the closed-form spectrum except ``compare_with_analytic``.

The Dirichlet wall at r_min only converges logarithmically when tau < 1/2.
``scheme="cylindrical"`` instead discretizes (1/r)(r psi')' in flux form on
the staggered nodes r_i = (i - 1/2) h, which is regular at the origin and
second-order for tau = 0 (but not for non-integer 0 < tau < 1).
"""
import math
from dataclasses import dataclass

import numpy as np

from . import model, spectra
from .errors import GridTooCoarse, InvalidParameter
from .tridiag import eigvalsh_tridiagonal

DEFAULT_COUNT = 4000
DEFAULT_R_MAX_FACTOR = 40.0
SUBSTITUTION = "u = sqrt(r) * psi"
SCHEMES = ("liouville", "cylindrical")


@dataclass(frozen=True)
class RadialGrid:
    """Interior nodes r_i = r_min + i h, i = 1..count, h = (r_max - r_min)/(count + 1)."""

    r_min: float
    r_max: float
    count: int = DEFAULT_COUNT

    def __post_init__(self):
        if not (0 < self.r_min < self.r_max) or not math.isfinite(self.r_max):
            raise InvalidParameter(f"need 0 < r_min < r_max, got {self.r_min}, {self.r_max}")
        if self.count < 100:
            raise InvalidParameter(f"count must be >= 100, got {self.count}")

    @property
    def h(self):
        return (self.r_max - self.r_min) / (self.count + 1)

    def nodes(self):
        return self.r_min + self.h * np.arange(1, self.count + 1)

    def refined(self):
        """Same interval with h halved exactly."""
        return RadialGrid(self.r_min, self.r_max, 2 * self.count + 1)

    @classmethod
    def for_scale(cls, scale, count=DEFAULT_COUNT, r_max_factor=DEFAULT_R_MAX_FACTOR):
        """r_min = 1e-4 / sqrt(scale), r_max = sqrt(r_max_factor / scale)."""
        return cls(1e-4 * math.sqrt(1.0 / scale), math.sqrt(r_max_factor / scale), count)


@dataclass(frozen=True)
class OracleResult:
    eigenvalues: tuple
    grid: RadialGrid
    substitution: str = SUBSTITUTION
    reduced_confidence: bool = False


def assemble(tau, scale, grid, scheme="liouville"):
    """Diagonal and off-diagonal of the discretized symmetric operator."""
    if scheme == "liouville":
        r = grid.nodes()
        h2 = grid.h ** 2
        potential = (tau * tau - 0.25) / (r * r) + scale * scale * r * r
        diag = 2.0 / h2 + potential
        off = np.full(grid.count - 1, -1.0 / h2)
    elif scheme == "cylindrical":
        # psi_{count+1} = 0 sits at r_max; r_min is unused
        h = grid.r_max / (grid.count + 0.5)
        r = h * (np.arange(1, grid.count + 1) - 0.5)
        outer = r + 0.5 * h
        inner = r - 0.5 * h
        diag = (outer + inner) / (r * h * h) + tau * tau / (r * r) + scale * scale * r * r
        off = -outer[:-1] / (h * h * np.sqrt(r[:-1] * r[1:]))
    else:
        raise InvalidParameter(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    return diag, off


def _lowest(tau, scale, grid, m, scheme):
    diag, off = assemble(tau, scale, grid, scheme)
    return eigvalsh_tridiagonal(diag, off, range(m))


def _reduced_confidence(tau, scheme):
    if scheme == "liouville":
        return tau < 0.5
    return 0.0 < tau < 1.0


def solve_radial(tau, scale, grid, m=4, tolerance=None, scheme="liouville"):
    """Lowest ``m`` eigenvalues C of the radial problem on ``grid``.

    If ``tolerance`` is given, the run is repeated with twice the nodes and
    GridTooCoarse is raised when any eigenvalue moves by more than that
    relative amount.
    """
    if not tau >= 0 or not math.isfinite(tau):
        raise InvalidParameter(f"tau must be >= 0, got {tau!r}")
    if not scale > 0 or not math.isfinite(scale):
        raise InvalidParameter(f"scale must be > 0, got {scale!r}")
    if m < 1 or m > grid.count // 10:
        raise InvalidParameter(f"m must lie in [1, count/10], got {m}")
    values = _lowest(tau, scale, grid, m, scheme)
    if tolerance is not None:
        doubled = RadialGrid(grid.r_min, grid.r_max, 2 * grid.count)
        fine = _lowest(tau, scale, doubled, m, scheme)
        change = np.max(np.abs(fine - values) / np.abs(fine))
        if change > tolerance:
            raise GridTooCoarse(
                f"relative change {change:.3g} under grid doubling exceeds {tolerance:g}")
    return OracleResult(eigenvalues=tuple(float(v) for v in values), grid=grid,
                        reduced_confidence=_reduced_confidence(tau, scheme))


def auto_r_max_factor(tau, n_max):
    """Default factor, widened so r_max clears the outermost turning point.

    The turning point of level n sits at s = 2 (2n + 1 + tau); doubling it
    and adding 20 keeps the Gaussian tail below ~1e-10.
    """
    return max(DEFAULT_R_MAX_FACTOR, 4.0 * (2 * n_max + 1 + tau) + 20.0)


@dataclass(frozen=True)
class LevelComparison:
    n: int
    analytic: float
    oracle: float
    rel_error: float
    passed: bool


@dataclass(frozen=True)
class ComparisonReport:
    l: int
    k: float
    tau: float
    scale: float
    levels: tuple
    tolerance: float
    grid: RadialGrid
    reduced_confidence: bool

    @property
    def passed(self):
        return all(c.passed for c in self.levels)

    @property
    def max_rel_error(self):
        return max(c.rel_error for c in self.levels)


def compare_with_analytic(bg, fc, osc, n_max=3, l=0, k=0.0, grid=None,
                          tolerance=1e-4, count=DEFAULT_COUNT,
                          r_max_factor=None, perturb_tau=0.0, scheme="liouville"):
    """Oracle spectrum against the closed-form levels n = 0..n_max.

    Analytic eps^2 is mapped to C = Pi (Coulomb) or Lambda (Cornell) and
    compared with the finite-difference eigenvalues. ``perturb_tau`` shifts
    the oracle's tau by that relative amount, for sensitivity checks.
    ``r_max_factor=None`` picks ``auto_r_max_factor``.
    """
    levels_qn = [model.QuantumNumbers(n, l, k) for n in range(n_max + 1)]
    tau, scale = model.confinement(bg, fc, osc, levels_qn[0])
    if grid is None:
        if r_max_factor is None:
            r_max_factor = auto_r_max_factor(tau, n_max)
        grid = RadialGrid.for_scale(scale, count, r_max_factor)
    result = solve_radial(tau * (1.0 + perturb_tau), scale, grid, m=n_max + 1,
                          scheme=scheme)
    rows = []
    for qn, c_oracle in zip(levels_qn, result.eigenvalues):
        lvl = spectra.energy(bg, fc, osc, qn, allow_tachyonic=True)
        c_analytic = model.derive_coefficients(
            bg, fc, osc, qn, epsilon_squared=lvl.epsilon_squared).constant
        err = abs(c_oracle - c_analytic) / abs(c_analytic)
        rows.append(LevelComparison(qn.n, c_analytic, c_oracle, err, err <= tolerance))
    return ComparisonReport(l=l, k=k, tau=tau, scale=scale, levels=tuple(rows),
                            tolerance=tolerance, grid=grid,
                            reduced_confidence=result.reduced_confidence)
