"""Self-check of the special functions against classical gamma/psi identities."""

import math
from dataclasses import dataclass

import numpy as np

from .specfun import EULER_GAMMA, digamma, harmonic, ln_gamma, trigamma

__all__ = ["IdentityCheck", "identity_battery"]


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self):
        return self.residual <= self.tolerance


def _max(values):
    return max(abs(v) for v in values)


def _recurrence():
    xs = np.logspace(-4, 5, 400)
    return _max(digamma(x + 1) - digamma(x) - 1.0 / x for x in xs)


def _finite_shift():
    xs = np.linspace(0.05, 10.0, 40)
    res = []
    for n in range(2, 51):
        for x in xs:
            rhs = math.fsum(1.0 / ((n - k) + x) for k in range(1, n)) + digamma(x + 1)
            res.append(digamma(x + n) - rhs)
    return _max(res)


def _reflection(xs):
    return _max(digamma(1 - x) - digamma(x) - math.pi / math.tan(math.pi * x) for x in xs)


def _integer_values():
    return _max(digamma(n) + EULER_GAMMA - harmonic(n - 1) for n in range(2, 101))


def _series(K=10**6):
    k = np.arange(1, K + 1, dtype=float)
    res = []
    for x in (0.1, 0.5, 1.0, 2.5, 5.0):
        partial = float(np.sum(x / (k * (k + x))))
        res.append(digamma(1 + x) + EULER_GAMMA - partial)
    return _max(res)


def _lngamma_asymptotic():
    xs = np.logspace(4, 6, 50)
    return _max(ln_gamma(x) - ((x - 0.5) * math.log(x) - x + 0.5 * math.log(2 * math.pi)) for x in xs)


def _digamma_asymptotic():
    xs = np.logspace(4, 6, 50)
    return _max(digamma(x) - (math.log(x) - 0.5 / x) for x in xs)


def _trigamma_recurrence():
    xs = np.logspace(-3, 4, 200)
    return max(abs(trigamma(x) - trigamma(x + 1) - 1.0 / (x * x)) * x * x for x in xs)


def identity_battery():
    """Evaluate every identity; returns a list of :class:`IdentityCheck`."""
    reflection_grid = [x for x in np.linspace(0.02, 0.98, 49) if abs(x - 0.5) > 1e-9]
    return [
        IdentityCheck("psi(1) = -euler_gamma", abs(digamma(1.0) + EULER_GAMMA), 1e-12),
        IdentityCheck("psi(x+1) = psi(x) + 1/x", _recurrence(), 1e-11),
        IdentityCheck("psi(x+n) = sum 1/((n-k)+x) + psi(x+1)", _finite_shift(), 1e-10),
        IdentityCheck("psi(1-x) = psi(x) + pi cot(pi x)", _reflection(reflection_grid), 1e-9),
        IdentityCheck("reflection at x = 0.25", _reflection([0.25]), 1e-9),
        IdentityCheck("psi(n) = -euler_gamma + H_(n-1)", _integer_values(), 1e-12),
        IdentityCheck("psi(1+x) = -euler_gamma + sum x/(k(k+x))", _series(), 1e-5),
        IdentityCheck("ln Gamma(x) ~ (x-1/2) ln x - x + ln(2 pi)/2", _lngamma_asymptotic(), 1e-4),
        IdentityCheck("psi(x) ~ ln x - 1/(2x)", _digamma_asymptotic(), 1e-8),
        IdentityCheck("psi'(x) = psi'(x+1) + 1/x^2 (relative)", _trigamma_recurrence(), 1e-10),
    ]
