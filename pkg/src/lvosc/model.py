"""Physical parameters and the coefficients of the reduced radial equation.

The radial equation in both coupling cases has the form

    psi'' + psi'/r + (C - tau**2 / r**2 - S**2 * r**2) psi = 0

with C = Pi, S = Omega (Coulomb-type f = b/r) or C = Lambda, S = delta
(Cornell-type f = a r + b/r). Natural units, c = hbar = 1.
"""
import math
from dataclasses import dataclass, field, replace
from typing import Optional, Union

from .errors import (
    ImaginaryCentrifugal,
    ImaginaryFrequency,
    InvalidParameter,
    NoBoundStates,
    NoConfinement,
)


def _finite(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidParameter(f"{name} must be a real number, got {value!r}")
    if not math.isfinite(value):
        raise InvalidParameter(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class LorentzBackground:
    """Lorentz-violating coefficients: coupling g, (kappa_DE)_11, (kappa_DB)_13.

    The (kappa_HB) sector is zero in this scenario and has no field.
    """

    g: float = 0.0
    kappa1: float = 0.0
    kappa2: float = 0.0

    def __post_init__(self):
        for name in ("g", "kappa1", "kappa2"):
            _finite(name, getattr(self, name))


@dataclass(frozen=True)
class FieldConfig:
    """E(r) = c1 r + c2 / r (radial), B(r) = chi r (axial)."""

    c1: float = 0.0
    c2: float = 0.0
    chi: float = 0.0

    def __post_init__(self):
        for name in ("c1", "c2", "chi"):
            _finite(name, getattr(self, name))

    def electric(self, r):
        return self.c1 * r + self.c2 / r

    def magnetic(self, r):
        return self.chi * r


@dataclass(frozen=True)
class CoulombType:
    """f(r) = b / r."""

    b: float = 0.0
    kind = "coulomb"

    def __post_init__(self):
        _finite("b", self.b)

    @property
    def a(self):
        return 0.0

    def __call__(self, r):
        return self.b / r


@dataclass(frozen=True)
class CornellType:
    """f(r) = a r + b / r."""

    a: float = 0.0
    b: float = 0.0
    kind = "cornell"

    def __post_init__(self):
        _finite("a", self.a)
        _finite("b", self.b)

    def __call__(self, r):
        return self.a * r + self.b / r


Coupling = Union[CoulombType, CornellType]


@dataclass(frozen=True)
class OscillatorSpec:
    mass: float
    omega: float
    coupling: Coupling = field(default_factory=CoulombType)

    def __post_init__(self):
        _finite("mass", self.mass)
        _finite("omega", self.omega)
        if self.mass <= 0:
            raise InvalidParameter(f"mass must be > 0, got {self.mass!r}")
        if self.omega < 0:
            raise InvalidParameter(f"omega must be >= 0, got {self.omega!r}")
        if not isinstance(self.coupling, (CoulombType, CornellType)):
            raise InvalidParameter(f"unknown coupling {self.coupling!r}")

    @property
    def is_cornell(self):
        return isinstance(self.coupling, CornellType)


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial number n >= 0, angular momentum l (any sign), axial wavenumber k."""

    n: int = 0
    l: int = 0
    k: float = 0.0

    def __post_init__(self):
        for name in ("n", "l"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidParameter(f"{name} must be an integer, got {v!r}")
        if self.n < 0:
            raise InvalidParameter(f"n must be >= 0, got {self.n}")
        _finite("k", self.k)


@dataclass(frozen=True)
class RadialCoefficients:
    """Coefficients of the reduced radial equation at a given energy.

    ``Lambda`` and ``delta`` are None for the Coulomb-type coupling.
    """

    Pi: float
    Omega: float
    tau: float
    Lambda: Optional[float] = None
    delta: Optional[float] = None

    @property
    def constant(self):
        """The spectral parameter C (Pi or Lambda)."""
        return self.Pi if self.Lambda is None else self.Lambda

    @property
    def scale(self):
        """Confinement strength S (Omega or delta), also the s = S r^2 scale."""
        return self.Omega if self.delta is None else self.delta


# -- composite quantities ----------------------------------------------------

def omega_squared(bg, fc):
    """Omega^2 = (g/2) c1^2 kappa1 + g c1 chi kappa2."""
    return 0.5 * bg.g * fc.c1 ** 2 * bg.kappa1 + bg.g * fc.c1 * fc.chi * bg.kappa2


def tau_squared(bg, fc, osc, qn):
    """tau^2 = l^2 + M^2 omega^2 b^2 + (g/2) c2^2 kappa1."""
    mw = osc.mass * osc.omega
    return (qn.l * qn.l + mw * mw * osc.coupling.b ** 2
            + 0.5 * bg.g * fc.c2 ** 2 * bg.kappa1)


def delta_squared(bg, fc, osc):
    """delta^2 = M^2 omega^2 a^2 + Omega^2 (Cornell); equals Omega^2 when a = 0."""
    mwa = osc.mass * osc.omega * osc.coupling.a
    return mwa * mwa + omega_squared(bg, fc)


def lsv_shift(bg, fc):
    """Energy-independent constant g kappa1 c1 c2 + g kappa2 chi c2."""
    return bg.g * bg.kappa1 * fc.c1 * fc.c2 + bg.g * bg.kappa2 * fc.chi * fc.c2


def cornell_shift(osc):
    """2 M omega a + 2 a b M^2 omega^2 (zero for the Coulomb type)."""
    a, b = osc.coupling.a, osc.coupling.b
    mw = osc.mass * osc.omega
    return 2.0 * mw * a + 2.0 * a * b * mw * mw


def _epsilon_squared(energy, epsilon_squared):
    if (energy is None) == (epsilon_squared is None):
        raise InvalidParameter("pass exactly one of energy, epsilon_squared")
    if energy is not None:
        _finite("energy", energy)
        return energy * energy
    _finite("epsilon_squared", epsilon_squared)
    return float(epsilon_squared)


def _omega_tau(bg, fc, osc, qn):
    w2 = omega_squared(bg, fc)
    if w2 < 0:
        raise ImaginaryFrequency(f"Omega^2 = {w2!r} < 0")
    t2 = tau_squared(bg, fc, osc, qn)
    if t2 < 0:
        raise ImaginaryCentrifugal(f"tau^2 = {t2!r} < 0")
    return math.sqrt(w2), math.sqrt(t2)


def derive_coulomb_coefficients(bg, fc, osc, qn, energy=None, *, epsilon_squared=None):
    """Pi, Omega, tau for f(r) = b/r at energy ``energy`` (or given eps^2).

    Raises
    ------
    ImaginaryFrequency
        If Omega^2 < 0.
    ImaginaryCentrifugal
        If tau^2 < 0.
    """
    if osc.is_cornell:
        raise InvalidParameter("Coulomb-type coupling required")
    e2 = _epsilon_squared(energy, epsilon_squared)
    omega, tau = _omega_tau(bg, fc, osc, qn)
    pi = e2 - osc.mass ** 2 - qn.k ** 2 - lsv_shift(bg, fc)
    return RadialCoefficients(Pi=pi, Omega=omega, tau=tau)


def derive_cornell_coefficients(bg, fc, osc, qn, energy=None, *, epsilon_squared=None):
    """Pi, Omega, tau plus Lambda and delta for f(r) = a r + b/r.

    Raises NoConfinement when delta = 0 in addition to the Coulomb errors.
    """
    if not osc.is_cornell:
        raise InvalidParameter("Cornell-type coupling required")
    e2 = _epsilon_squared(energy, epsilon_squared)
    omega, tau = _omega_tau(bg, fc, osc, qn)
    d2 = delta_squared(bg, fc, osc)
    if d2 <= 0:
        raise NoConfinement("delta = 0: no confining term, continuum spectrum")
    pi = e2 - osc.mass ** 2 - qn.k ** 2 - lsv_shift(bg, fc)
    return RadialCoefficients(Pi=pi, Omega=omega, tau=tau,
                              Lambda=pi - cornell_shift(osc), delta=math.sqrt(d2))


def derive_coefficients(bg, fc, osc, qn, energy=None, *, epsilon_squared=None):
    """Dispatch on the coupling kind."""
    fn = derive_cornell_coefficients if osc.is_cornell else derive_coulomb_coefficients
    return fn(bg, fc, osc, qn, energy, epsilon_squared=epsilon_squared)


def confinement(bg, fc, osc, qn):
    """(tau, scale) of the bound-state problem, raising if there is none."""
    omega, tau = _omega_tau(bg, fc, osc, qn)
    if osc.is_cornell:
        d2 = delta_squared(bg, fc, osc)
        if d2 <= 0:
            raise NoConfinement("delta = 0: no confining term, continuum spectrum")
        return tau, math.sqrt(d2)
    if omega == 0:
        raise NoBoundStates("Omega = 0: radial equation is Bessel-type")
    return tau, omega


# -- validation ---------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    value: float
    message: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple
    bound_states: bool
    error_code: Optional[str] = None

    @property
    def ok(self):
        return self.bound_states

    @property
    def failures(self):
        return [c for c in self.checks if not c.ok]

    def summary(self):
        if self.ok:
            return "ok: bound states exist"
        # messages are "<Code>: <text>"; the code is reported separately
        return "; ".join(c.message.split(": ", 1)[-1] for c in self.failures
                         if not c.message.startswith("undetermined"))


def validate_scenario(bg, fc, osc, qn):
    """Check positivity of Omega^2, tau^2, delta^2 and bound-state existence.

    Never raises; the first failing condition determines ``error_code``.
    """
    checks = []
    w2 = omega_squared(bg, fc)
    t2 = tau_squared(bg, fc, osc, qn)
    checks.append(Check("omega_squared", w2 >= 0, w2,
                        "" if w2 >= 0 else f"ImaginaryFrequency: Omega^2 = {w2:.12g} < 0"))
    checks.append(Check("tau_squared", t2 >= 0, t2,
                        "" if t2 >= 0 else f"ImaginaryCentrifugal: tau^2 = {t2:.12g} < 0"))
    if osc.is_cornell:
        d2 = delta_squared(bg, fc, osc)
        checks.append(Check("delta_squared", d2 > 0, d2,
                            "" if d2 > 0 else "NoConfinement: delta = 0, continuum spectrum"))
        scale_sq = d2
    else:
        scale_sq = w2
    bound = w2 >= 0 and t2 >= 0 and scale_sq > 0
    if bound:
        msg = ""
    elif w2 < 0 or t2 < 0:
        msg = "undetermined: coefficients not real"
    elif osc.is_cornell:
        msg = "NoConfinement: delta = 0, continuum spectrum"
    else:
        msg = "NoBoundStates: no bound states: Omega=0, equation is Bessel-type"
    checks.append(Check("bound_states", bound, math.sqrt(max(scale_sq, 0.0)), msg))

    code = None
    for c in checks:
        if not c.ok:
            code = c.message.split(":", 1)[0]
            if code == "undetermined":
                continue
            break
    return ValidationReport(checks=tuple(checks), bound_states=bound, error_code=code)


def without_lsv(bg):
    """Same coupling g with kappa1 = kappa2 = 0."""
    return replace(bg, kappa1=0.0, kappa2=0.0)
