import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lvosc.errors import DomainError
from lvosc.special import gauss_laguerre_nodes, laguerre, log_gamma


def laguerre_series(n, tau, s):
    """Explicit sum_i (-1)^i C(n+tau, n-i) s^i / i! in 50-digit arithmetic.

    The alternating sum cancels badly in double precision at large s.
    """
    with mpmath.workdps(50):
        tau, s = mpmath.mpf(tau), mpmath.mpf(s)
        total = mpmath.fsum((-1) ** i * mpmath.binomial(n + tau, n - i) * s ** i
                            / mpmath.factorial(i) for i in range(n + 1))
        return float(total)


# -- log_gamma ---------------------------------------------------------------

def test_log_gamma_examples():
    assert log_gamma(1.0) == 0.0
    assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-15)
    assert log_gamma(0.5) == pytest.approx(0.5723649429, abs=1e-10)
    assert log_gamma(11) == pytest.approx(math.log(3628800), rel=1e-15)


@pytest.mark.parametrize("x", np.concatenate([np.linspace(0.5, 3.0, 101),
                                              [0.999999, 1.000001, 1.9999999, 2.0000001],
                                              np.geomspace(3.0, 200.0, 60)]))
def test_log_gamma_relative_error_against_mpmath(x):
    ref = float(mpmath.loggamma(mpmath.mpf(float(x))))
    got = log_gamma(x)
    if ref == 0.0:
        assert got == 0.0
    else:
        assert abs(got - ref) <= 1e-13 * abs(ref)


@given(st.floats(min_value=1e-3, max_value=250.0))
def test_log_gamma_functional_equation(x):
    lhs = log_gamma(x + 1.0)
    assert abs(lhs - log_gamma(x) - math.log(x)) <= 1e-13 * max(1.0, abs(lhs))


@pytest.mark.parametrize("x", [0.0, -1.0, float("nan"), float("inf")])
def test_log_gamma_domain(x):
    with pytest.raises(DomainError):
        log_gamma(x)


# -- laguerre ----------------------------------------------------------------

def test_laguerre_examples():
    assert laguerre(0, 3.7, 12.0) == 1.0
    assert laguerre(1, 1.0, 2.0) == 0.0
    # series oracle: 2.1875 - 4.375 + 1.75 - 1/6 = -29/48
    assert laguerre_series(3, 0.5, 1.0) == pytest.approx(-29 / 48, rel=1e-14)
    assert laguerre(3, 0.5, 1.0) == pytest.approx(-29 / 48, rel=1e-14)


@pytest.mark.parametrize("n", range(11))
@pytest.mark.parametrize("s", [0.1, 1.0, 10.0])
@pytest.mark.parametrize("tau", [-0.7, 0.0, 0.5, 2.3, 7.0])
def test_recurrence_matches_series(n, s, tau):
    ref = laguerre_series(n, tau, s)
    got = laguerre(n, tau, s)
    assert abs(got - ref) <= 1e-11 * abs(ref)


def test_laguerre_array_shape():
    s = np.linspace(0, 4, 6).reshape(2, 3)
    out = laguerre(2, 1.0, s)
    assert out.shape == (2, 3)
    assert out[0, 0] == pytest.approx(3.0)  # L_2^(1)(0) = C(3, 2)


@pytest.mark.parametrize("args", [(1, -1.0, 1.0), (1, 0.0, -0.1), (-1, 0.0, 1.0), (1.5, 0.0, 1.0)])
def test_laguerre_domain(args):
    with pytest.raises(DomainError):
        laguerre(*args)


# -- Gauss-Laguerre ----------------------------------------------------------

def test_one_point_rule():
    nodes, weights = gauss_laguerre_nodes(1, 0.0)
    assert nodes[0] == pytest.approx(1.0, abs=1e-15)
    assert weights[0] == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("count,tau", [(3, 0.0), (8, -0.5), (12, 1.3), (20, 6.0)])
def test_moments_exact(count, tau):
    nodes, weights = gauss_laguerre_nodes(count, tau)
    for m in range(2 * count):
        ref = math.exp(math.lgamma(tau + m + 1))
        assert np.dot(weights, nodes ** m) == pytest.approx(ref, rel=1e-11)


@pytest.mark.parametrize("tau", [-0.9, 0.0, 1.3, 9.5])
@pytest.mark.parametrize("count", [1, 10, 200])
def test_weights_sum_to_gamma(count, tau):
    _, weights = gauss_laguerre_nodes(count, tau)
    assert weights.sum() == pytest.approx(math.gamma(tau + 1), rel=1e-12)


def test_nodes_match_scipy():
    from scipy.special import roots_genlaguerre
    for count, tau in [(5, 0.0), (40, 1.3), (200, 2.0)]:
        x_ref, w_ref = roots_genlaguerre(count, tau)
        x, w = gauss_laguerre_nodes(count, tau)
        np.testing.assert_allclose(x, x_ref, rtol=1e-11)
        big = w_ref > 1e-200
        np.testing.assert_allclose(w[big], w_ref[big], rtol=1e-8)


def test_laguerre_norm_from_forty_point_rule():
    tau = 1.3
    nodes, weights = gauss_laguerre_nodes(40, tau)
    val = np.dot(weights, laguerre(5, tau, nodes) ** 2)
    ref = math.exp(math.lgamma(5 + tau + 1) - math.lgamma(6))
    assert val == pytest.approx(ref, rel=1e-10)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=-0.9, max_value=10.0))
def test_orthogonality(tau):
    nodes, weights = gauss_laguerre_nodes(40, tau)
    lag = [laguerre(n, tau, nodes) for n in range(9)]
    for n in range(9):
        for m in range(9):
            val = np.dot(weights, lag[n] * lag[m])
            h_n = math.exp(math.lgamma(n + tau + 1) - math.lgamma(n + 1))
            h_m = math.exp(math.lgamma(m + tau + 1) - math.lgamma(m + 1))
            if n == m:
                assert abs(val - h_n) <= 1e-9 * h_n
            else:
                # relative to the norms; they reach ~1e11 at tau = 10
                assert abs(val) / math.sqrt(h_n * h_m) < 1e-9


def test_rule_is_cached_and_read_only():
    a = gauss_laguerre_nodes(30, 0.25)
    assert gauss_laguerre_nodes(30, 0.25)[0] is a[0]
    with pytest.raises(ValueError):
        a[0][0] = 1.0


@pytest.mark.parametrize("args", [(0, 0.0), (5, -1.0), (2.5, 0.0)])
def test_rule_domain(args):
    with pytest.raises(DomainError):
        gauss_laguerre_nodes(*args)
