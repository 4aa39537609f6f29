import math

import numpy as np
import pytest

from lvosc import model


def make(g=0.0, kappa1=0.0, kappa2=0.0, c1=0.0, c2=0.0, chi=0.0, mass=1.0, omega=1.0,
         a=None, b=0.0, n=0, l=0, k=0.0):
    """(bg, fc, osc, qn) tuple; Cornell coupling when ``a`` is given."""
    coupling = model.CoulombType(b) if a is None else model.CornellType(a, b)
    return (model.LorentzBackground(g, kappa1, kappa2), model.FieldConfig(c1, c2, chi),
            model.OscillatorSpec(mass, omega, coupling), model.QuantumNumbers(n, l, k))


COULOMB_BASIC = dict(g=1, kappa1=2, kappa2=0, c1=1, c2=0, chi=0, mass=1, omega=1, b=1)
COULOMB_FULL = dict(g=1, kappa1=1, kappa2=1, c1=1, c2=1, chi=2, mass=1, omega=1, b=1,
                    l=2, k=0.5)
CORNELL_BASIC = dict(a=1, b=1, g=0, mass=1, omega=1)
CORNELL_FULL = dict(g=1, kappa1=2, kappa2=1, c1=1, c2=1, chi=1, mass=1, omega=1, a=1,
                    b=1, l=1)


def random_valid(rng, cornell):
    """Random parameter set with Omega^2 > 0.01 (so both cases are bound)."""
    while True:
        p = dict(
            g=rng.uniform(0.1, 2.0), kappa1=rng.uniform(-0.5, 2.0),
            kappa2=rng.uniform(-1.0, 1.0), c1=rng.uniform(0.2, 2.0),
            c2=rng.uniform(-1.0, 1.0), chi=rng.uniform(-1.0, 1.0),
            mass=rng.uniform(0.5, 2.0), omega=rng.uniform(0.0, 2.0),
            b=rng.uniform(-1.0, 1.0), l=int(rng.integers(-4, 5)),
            k=rng.uniform(-1.0, 1.0),
        )
        if cornell:
            p["a"] = rng.uniform(-1.0, 1.0)
        bg, fc, osc, qn = make(**p)
        if model.omega_squared(bg, fc) > 0.01 and model.tau_squared(bg, fc, osc, qn) >= 0:
            return p


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)
