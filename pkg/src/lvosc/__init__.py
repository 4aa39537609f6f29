"""Bound states of the generalized Klein-Gordon oscillator in a CPT-even
Lorentz-violating background, with Coulomb-type (f = b/r) and Cornell-type
(f = a r + b/r) couplings.
"""
from ._backend import BACKEND
from .errors import (
    ConvergenceError,
    DomainError,
    GridTooCoarse,
    ImaginaryCentrifugal,
    ImaginaryFrequency,
    InvalidParameter,
    LvoscError,
    NegativeDiscriminant,
    NoBoundStates,
    NoConfinement,
    NumericalFailure,
    TachyonicLevel,
    Unsupported,
)
from .model import (
    CornellType,
    CoulombType,
    FieldConfig,
    LorentzBackground,
    OscillatorSpec,
    QuantumNumbers,
    RadialCoefficients,
    derive_coefficients,
    derive_cornell_coefficients,
    derive_coulomb_coefficients,
    validate_scenario,
)
from .nu import (
    NuDerived,
    NuInput,
    derive_alphas,
    eigenfunction_alpha3_zero,
    quantization_residual,
    solve_quantization,
)
from .oracle import RadialGrid, compare_with_analytic, solve_radial
from .special import gauss_laguerre_nodes, laguerre, log_gamma
from .spectra import (
    EnergyLevel,
    RadialWavefunction,
    energy_cornell,
    energy_coulomb,
    limit_checks,
    ode_residual,
    wavefunction,
)

__version__ = "0.1.0"
