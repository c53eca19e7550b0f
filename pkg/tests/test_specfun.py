import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdist.errors import DomainError
from qdist.specfun import (
    EULER_GAMMA,
    digamma,
    harmonic,
    ln_factorial_crude,
    ln_factorial_exact,
    ln_factorial_stirling,
    ln_gamma,
    trigamma,
)

mpmath.mp.dps = 40

log_uniform = st.floats(min_value=-6.0, max_value=6.0).map(lambda e: 10.0**e)


def test_ln_gamma_examples():
    assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
    assert ln_gamma(3.0) == pytest.approx(math.log(2.0), abs=1e-14)
    # ln sqrt(pi)
    assert ln_gamma(0.5) == pytest.approx(0.572364942924700087, abs=1e-13)
    assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-13)


def test_ln_gamma_half_matches_quadrature():
    # Gamma(1/2) from its Euler integral
    g = mpmath.quad(lambda t: mpmath.exp(-t) * t ** (-0.5), [0, 1, mpmath.inf])
    assert ln_gamma(0.5) == pytest.approx(float(mpmath.log(g)), abs=1e-12)


def test_digamma_examples():
    assert digamma(1.0) == pytest.approx(-0.577215664902, abs=1e-12)
    assert digamma(2.0) == pytest.approx(1.0 - EULER_GAMMA, abs=1e-12)
    assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2.0 * math.log(2.0), abs=1e-12)


def test_digamma_half_against_series():
    # psi(1 + x) = -gamma + sum x/(k(k+x)) at x = -1/2, summed exactly by mpmath
    s = mpmath.nsum(lambda k: -0.5 / (k * (k - 0.5)), [1, mpmath.inf])
    assert digamma(0.5) == pytest.approx(float(-mpmath.euler + s), abs=1e-12)


def test_trigamma_examples():
    assert trigamma(1.0) == pytest.approx(math.pi**2 / 6.0, rel=1e-10)
    assert trigamma(2.0) == pytest.approx(math.pi**2 / 6.0 - 1.0, rel=1e-10)
    assert trigamma(1e6) == pytest.approx(1e-6, rel=1e-9)


def test_trigamma_one_against_termwise_series():
    # derivative of sum x/(k(k+x)) at x = 0 is sum 1/k^2
    s = mpmath.nsum(lambda k: 1 / k**2, [1, mpmath.inf])
    assert trigamma(1.0) == pytest.approx(float(s), rel=1e-12)


@pytest.mark.parametrize("n,expected", [(1, 1.0), (2, 1.5), (10, float(sum(Fraction(1, k) for k in range(1, 11))))])
def test_harmonic(n, expected):
    assert harmonic(n) == pytest.approx(expected, abs=1e-14)


def test_harmonic_ten_frozen():
    assert harmonic(10) == pytest.approx(2.928968253968, abs=1e-12)


@pytest.mark.parametrize("n", [1, 2, 5, 17, 100, 1000])
def test_harmonic_matches_digamma(n):
    assert harmonic(n) == pytest.approx(digamma(n + 1) + EULER_GAMMA, abs=1e-12)


@pytest.mark.parametrize("bad", [0, -1, 2.5, True])
def test_harmonic_domain(bad):
    with pytest.raises(DomainError):
        harmonic(bad)


@pytest.mark.parametrize("func", [ln_gamma, digamma, trigamma])
@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, math.inf, math.nan])
def test_gamma_family_domain(func, bad):
    with pytest.raises(DomainError):
        func(bad)


@settings(max_examples=300, deadline=None)
@given(log_uniform)
def test_against_mpmath(x):
    lg = float(mpmath.loggamma(x))
    dg = float(mpmath.digamma(x))
    tg = float(mpmath.psi(1, x))
    # absolute 1e-12 where representable; relative 1e-12 once |f| > 1
    assert abs(ln_gamma(x) - lg) <= 1e-12 * max(1.0, abs(lg))
    assert abs(digamma(x) - dg) <= 1e-12 * max(1.0, abs(dg))
    assert abs(trigamma(x) - tg) <= 1e-10 * tg


def test_ln_factorial_exact():
    assert ln_factorial_exact(0) == 0.0
    assert ln_factorial_exact(2) == pytest.approx(math.log(2.0), abs=1e-14)
    assert ln_factorial_exact(2) == pytest.approx(0.693, abs=5e-4)
    assert ln_factorial_exact(16) == pytest.approx(30.671860106081, abs=1e-11)
    for n in range(31):
        assert ln_factorial_exact(n) == pytest.approx(math.log(math.factorial(n)), abs=1e-11)
    with pytest.raises(DomainError):
        ln_factorial_exact(-0.1)


def test_ln_factorial_noninteger():
    assert ln_factorial_exact(0.5) == pytest.approx(float(mpmath.loggamma(1.5)), abs=1e-14)


def test_ln_factorial_crude():
    assert ln_factorial_crude(1) == pytest.approx(-1.0, abs=1e-15)
    assert ln_factorial_crude(2) == pytest.approx(2 * math.log(2) - 2, abs=1e-15)
    assert ln_factorial_crude(2) < 0
    exact = math.log(math.factorial(16))
    assert (exact - ln_factorial_crude(16)) / exact == pytest.approx(0.075, abs=0.003)
    with pytest.raises(DomainError):
        ln_factorial_crude(0)


def test_ln_factorial_stirling():
    assert ln_factorial_stirling(2) == pytest.approx(0.652, abs=1e-3)
    assert ln_factorial_stirling(1) == pytest.approx(0.5 * math.log(2 * math.pi) - 1, abs=1e-15)
    exact = math.log(math.factorial(16))
    assert (exact - ln_factorial_stirling(16)) / exact == pytest.approx(0.00017, abs=0.00005)
    with pytest.raises(DomainError):
        ln_factorial_stirling(-2)


# -- identities ---------------------------------------------------------------


def test_recurrence():
    for x in np.logspace(-4, 5, 300):
        assert abs(digamma(x + 1) - digamma(x) - 1 / x) <= 1e-11


@pytest.mark.parametrize("n", [2, 3, 7, 20, 50])
def test_finite_shift(n):
    for x in np.linspace(0.01, 10, 50):
        rhs = math.fsum(1 / ((n - k) + x) for k in range(1, n)) + digamma(x + 1)
        assert digamma(x + n) == pytest.approx(rhs, abs=1e-10)


def test_reflection():
    for x in np.linspace(0.01, 0.99, 99):
        if abs(x - 0.5) < 1e-9:
            continue
        assert digamma(1 - x) - digamma(x) - math.pi / math.tan(math.pi * x) == pytest.approx(0, abs=1e-9)


def test_integer_values():
    for n in range(2, 101):
        assert digamma(n) == pytest.approx(-EULER_GAMMA + harmonic(n - 1), abs=1e-12)


def test_series_partial_sum():
    k = np.arange(1, 10**6 + 1, dtype=float)
    previous = None
    for K in (10**4, 10**5, 10**6):
        errs = []
        for x in (0.3, 1.0, 5.0):
            errs.append(abs(digamma(1 + x) + EULER_GAMMA - np.sum(x / (k[:K] * (k[:K] + x)))))
        if previous is not None:
            assert max(errs) < previous
        previous = max(errs)
    assert previous <= 1e-5


def test_asymptotics():
    for x in np.logspace(4, 6, 30):
        assert abs(ln_gamma(x) - ((x - 0.5) * math.log(x) - x + 0.5 * math.log(2 * math.pi))) <= 1e-4
        assert abs(digamma(x) - (math.log(x) - 0.5 / x)) <= 1e-8


def test_monotone_digamma_positive_trigamma():
    xs = np.logspace(-5, 5, 2000)
    ps = [digamma(x) for x in xs]
    assert all(b > a for a, b in zip(ps, ps[1:]))
    assert all(trigamma(x) > 0 for x in xs)
