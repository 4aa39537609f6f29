import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lvosc import spectra
from lvosc.errors import ConvergenceError, InvalidParameter, NegativeDiscriminant, Unsupported
from lvosc.nu import (
    NuInput,
    derive_alphas,
    eigenfunction_alpha3_zero,
    quantization_residual,
    residual_at,
    solve_quantization,
)

from .conftest import COULOMB_FULL, make


def oscillator_input(xi2, tau=1.0):
    return NuInput(1.0, 0.0, 0.0, 0.25, xi2, tau * tau / 4.0)


def test_derive_alphas_mapped_case():
    d = derive_alphas(oscillator_input(0.37))
    assert (d.alpha4, d.alpha5, d.alpha6, d.alpha7) == (0.0, 0.0, 0.25, -0.37)
    assert (d.alpha8, d.alpha9, d.alpha10, d.alpha11) == (0.25, 0.25, 2.0, 1.0)
    assert (d.alpha12, d.alpha13) == (0.5, -0.5)


@pytest.mark.parametrize("tau", [0.0, 0.3, 1.7, 12.0])
def test_derive_alphas_general_tau(tau):
    d = derive_alphas(oscillator_input(1.0, tau))
    assert d.alpha10 == pytest.approx(1.0 + tau, rel=1e-15)
    assert d.alpha12 == pytest.approx(tau / 2.0, rel=1e-15)


def test_negative_alpha8():
    with pytest.raises(NegativeDiscriminant) as info:
        derive_alphas(NuInput(1.0, 0.0, 0.0, 0.25, 0.0, -1.0))
    assert info.value.which == "alpha8"


def test_negative_alpha9():
    # alpha9 = alpha6 + alpha3 alpha7 + alpha3^2 alpha8 with a large xi2
    with pytest.raises(NegativeDiscriminant) as info:
        derive_alphas(NuInput(1.0, 0.0, 1.0, 0.25, 10.0, 0.25))
    assert info.value.which == "alpha9"


def test_input_requires_positive_xi1():
    with pytest.raises(InvalidParameter):
        NuInput(1.0, 0.0, 0.0, 0.0, 1.0, 1.0)


finite = st.floats(min_value=-3, max_value=3)


@given(a1=finite, a2=finite, a3=finite, x1=st.floats(0.01, 3), x2=finite,
       x3=st.floats(-1, 3))
def test_identity_suite(a1, a2, a3, x1, x2, x3):
    inp = NuInput(a1, a2, a3, x1, x2, x3)
    a4 = (1 - a1) / 2
    a5 = (a2 - 2 * a3) / 2
    a6 = a5 ** 2 + x1
    a7 = 2 * a4 * a5 - x2
    a8 = a4 ** 2 + x3
    a9 = a6 + a3 * a7 + a3 ** 2 * a8
    assume(a8 >= 0 and a9 >= 0)
    d = derive_alphas(inp)
    tol = dict(rel=1e-14, abs=1e-14)
    assert d.alpha4 == pytest.approx(a4, **tol)
    assert d.alpha5 == pytest.approx(a5, **tol)
    assert d.alpha6 == pytest.approx(a6, **tol)
    assert d.alpha7 == pytest.approx(a7, **tol)
    assert d.alpha8 == pytest.approx(a8, **tol)
    assert d.alpha9 == pytest.approx(a9, **tol)
    assert d.alpha10 == pytest.approx(a1 + 2 * a4 + 2 * math.sqrt(a8), **tol)
    assert d.alpha11 == pytest.approx(
        a2 - 2 * a5 + 2 * (math.sqrt(a9) + a3 * math.sqrt(a8)), **tol)
    assert d.alpha12 == pytest.approx(a4 + math.sqrt(a8), **tol)
    assert d.alpha13 == pytest.approx(a5 - (math.sqrt(a9) + a3 * math.sqrt(a8)), **tol)


@given(x1=st.floats(0.01, 3), x2=finite, x3=st.floats(0, 3), n=st.integers(0, 20))
def test_alpha3_zero_reduction(x1, x2, x3, n):
    inp = NuInput(1.0, 0.0, 0.0, x1, x2, x3)
    res = quantization_residual(inp, derive_alphas(inp), n)
    ref = (2 * n + 1) * math.sqrt(x1) - x2 + 2 * math.sqrt(x1 * x3)
    assert res == pytest.approx(ref, rel=1e-13, abs=1e-13)


def test_residual_zero_at_xi2_one():
    inp = oscillator_input(1.0)
    assert quantization_residual(inp, derive_alphas(inp), 0) == 0.0
    inp = oscillator_input(1.01)
    assert quantization_residual(inp, derive_alphas(inp), 0) != 0.0


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("tau", [0.0, 1.0, 2.6457513110645907])
def test_residual_roots_match_closed_form(n, tau):
    # oracle: closed-form C = 2 S (2n + 1 + tau) from spectra, xi2 = C / (4 S)
    bg, fc, osc, qn = make(g=1, kappa1=2, c1=1, b=0, l=0, n=n)
    scale = 1.0
    c_closed = 2.0 * scale * (2 * n + 1 + tau)
    root = solve_quantization(lambda x: oscillator_input(x, tau), n, -10.0, 60.0)
    assert root == pytest.approx(c_closed / (4.0 * scale), rel=1e-12)
    assert root == pytest.approx((2 * n + 1 + tau) / 2, rel=1e-12)


def test_root_matches_spectra_for_full_fixture():
    for n in range(4):
        bg, fc, osc, qn = make(**dict(COULOMB_FULL, n=n))
        c_closed = spectra.spectral_constant(bg, fc, osc, qn)
        tau, scale = spectra.model.confinement(bg, fc, osc, qn)
        root = solve_quantization(lambda x: oscillator_input(x, tau), n, 0.0, 100.0)
        assert 4.0 * scale * root == pytest.approx(c_closed, rel=1e-12)


@given(tau=st.floats(0, 10), x2=st.floats(-5, 5), n=st.integers(0, 10))
def test_residual_monotone(tau, x2, n):
    f = lambda x, m: residual_at(lambda v: oscillator_input(v, tau), m, x)
    assert f(x2 + 0.1, n) < f(x2, n)
    assert f(x2, n + 1) > f(x2, n)


def test_solve_needs_bracket():
    with pytest.raises(ConvergenceError):
        solve_quantization(lambda x: oscillator_input(x), 0, 5.0, 6.0)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_general_alpha3_condition_yields_jacobi_solution(n):
    """Roots of the general condition make the Jacobi-form function solve the ODE."""
    a1, a2, a3, x1, x3 = 1.2, 2.5, 0.3, 0.8, 0.6
    make_in = lambda x: NuInput(a1, a2, a3, x1, x, x3)
    grid = np.linspace(-20, 20, 401)
    vals = []
    for x in grid:
        try:
            vals.append(residual_at(make_in, n, x))
        except NegativeDiscriminant:
            vals.append(None)
    i = next(j for j in range(len(grid) - 1)
             if None not in (vals[j], vals[j + 1]) and (vals[j] > 0) != (vals[j + 1] > 0))
    xi2 = solve_quantization(make_in, n, grid[i], grid[i + 1])
    d = derive_alphas(make_in(xi2))

    def psi(s):
        return (s ** d.alpha12 * (1 - a3 * s) ** (-d.alpha12 - d.alpha13 / a3)
                * mpmath.jacobi(n, d.alpha10 - 1, d.alpha11 / a3 - d.alpha10 - 1, 1 - 2 * a3 * s))

    for s in (0.3, 1.0, 2.0):
        s = mpmath.mpf(s)
        res = (mpmath.diff(psi, s, 2) + (a1 - a2 * s) / (s * (1 - a3 * s)) * mpmath.diff(psi, s)
               + (-x1 * s ** 2 + xi2 * s - x3) / (s ** 2 * (1 - a3 * s) ** 2) * psi(s))
        assert abs(res) < 1e-9 * max(1.0, abs(psi(s)))


# -- eigenfunctions ----------------------------------------------------------

def test_eigenfunction_vanishes_at_origin():
    inp = oscillator_input(1.0, 1.0)
    assert eigenfunction_alpha3_zero(inp, derive_alphas(inp), 0, 0.0) == 0.0


def test_eigenfunction_node():
    inp = oscillator_input(2.0, 1.0)
    val = eigenfunction_alpha3_zero(inp, derive_alphas(inp), 1, 2.0)
    assert val == pytest.approx(math.sqrt(2) * math.exp(-1) * 0.0, abs=1e-15)


@pytest.mark.parametrize("n,tau", [(0, 1.0), (2, 0.5), (4, 3.3), (3, 0.0)])
def test_eigenfunction_is_laguerre_form(n, tau):
    inp = oscillator_input((2 * n + 1 + tau) / 2, tau)
    d = derive_alphas(inp)
    s = np.linspace(0.05, 12, 25)
    got = eigenfunction_alpha3_zero(inp, d, n, s)
    ref = s ** (tau / 2) * np.exp(-s / 2) * [float(mpmath.laguerre(n, tau, x)) for x in s]
    np.testing.assert_allclose(got, ref, rtol=1e-12, atol=1e-300)


@pytest.mark.parametrize("params", [dict(COULOMB_FULL), dict(g=1, kappa1=2, c1=1, b=1)])
@pytest.mark.parametrize("n", [0, 1, 3])
def test_eigenfunction_proportional_to_wavefunction(params, n):
    bg, fc, osc, qn = make(**dict(params, n=n))
    psi = spectra.wavefunction(bg, fc, osc, qn)
    lvl = spectra.energy(bg, fc, osc, qn)
    coeffs = spectra.model.derive_coefficients(bg, fc, osc, qn, lvl.epsilon_plus)
    inp = spectra.nu_input(coeffs)
    d = derive_alphas(inp)
    r = np.linspace(0.1, 2.5, 10)
    ratio = psi(r) / eigenfunction_alpha3_zero(inp, d, n, coeffs.scale * r * r)
    # nodes of L_n make pointwise ratios ill-conditioned; compare away from them
    ok = np.abs(psi(r)) > 1e-6
    np.testing.assert_allclose(ratio[ok], ratio[ok][0], rtol=1e-9)
    assert ratio[ok][0] == pytest.approx(psi.norm, rel=1e-12)


def test_eigenfunction_requires_alpha3_zero():
    inp = NuInput(1.0, 0.0, 0.1, 0.25, 0.5, 0.25)
    with pytest.raises(Unsupported):
        eigenfunction_alpha3_zero(inp, derive_alphas(inp), 0, 1.0)
