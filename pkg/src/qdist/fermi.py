"""Occupation numbers and entropies of a fermion level of degeneracy ``z``.

Throughout, ``n`` is the mean population per state of the level and
``theta = (energy - mu) / T``.  The exact relation between them is

    theta(n) = psi(z (1 - n) + 1) - psi(z n + 1),

which is strictly decreasing and maps ``[0, 1]`` onto
``[-theta_max, theta_max]`` with ``theta_max = H_z``.  Outside that window the
exact occupation is pinned at 0 or 1.
"""

import math

import numpy as np

from . import _checks
from ._roots import invert_decreasing
from .errors import ConvergenceError, DomainError
from .specfun import digamma, harmonic, ln_gamma, trigamma

__all__ = [
    "fd_classical",
    "fd_theta_exact",
    "fd_theta_series",
    "fd_theta_stirling",
    "fd_occupation_corrected",
    "fd_occupation_exact",
    "fd_theta_max",
    "fd_entropy_exact",
    "fd_entropy_stirling",
    "fd_entropy_classical",
]

SERIES_MAX_TERMS = 10**8


def _interior(n):
    n = float(n)
    if not 0.0 < n < 1.0:
        raise DomainError(f"occupation must lie in (0, 1), got {n!r}")
    return n


def _closed(n):
    n = float(n)
    if not 0.0 <= n <= 1.0:
        raise DomainError(f"occupation must lie in [0, 1], got {n!r}")
    return n


def fd_classical(theta):
    """Fermi-Dirac occupation ``1 / (exp(theta) + 1)``."""
    theta = float(theta)
    if math.isnan(theta):
        raise DomainError("theta is NaN")
    if theta >= 0.0:
        e = math.exp(-theta)
        return e / (1.0 + e)
    return 1.0 / (1.0 + math.exp(theta))


def _theta(n, z):
    return digamma(z * (1.0 - n) + 1.0) - digamma(z * n + 1.0)


def _dtheta(n, z):
    return -z * (trigamma(z * (1.0 - n) + 1.0) + trigamma(z * n + 1.0))


def fd_theta_exact(n, z):
    """Exact ``theta`` at which a level of degeneracy ``z`` has occupation ``n``."""
    z = _checks.degeneracy(z)
    return _theta(_interior(n), z)


def fd_theta_max(z):
    """Upper edge of the partial-occupation window, ``psi(z + 1) - psi(1)``."""
    return harmonic(_checks.degeneracy(z))


def _series_tail_bounds(c, a, b):
    # integral of 1/((k+a)(k+b)) over [c, inf)
    if a == b:
        return 1.0 / (c + a)
    return math.log1p((a - b) / (c + b)) / (a - b)


def fd_theta_series(n, z, tol=1e-10, max_terms=SERIES_MAX_TERMS):
    """Exact ``theta(n)`` summed from its slowly converging series.

    The first ``K`` terms are added explicitly.  The remainder is bracketed
    between the integrals of the (convex) summand over ``[K + 1, inf)`` and
    ``[K + 1/2, inf)``; the midpoint of that bracket is added and ``K`` is
    chosen so that half its width is below ``tol``.
    """
    z = _checks.degeneracy(z)
    n = _interior(n)
    tol = _checks.positive_tol(tol)
    prefactor = z * (1.0 - 2.0 * n)
    if prefactor == 0.0:
        return 0.0
    a = z * (1.0 - n)
    b = z * n

    K = 64
    while True:
        upper = _series_tail_bounds(K + 0.5, a, b)
        lower = _series_tail_bounds(K + 1.0, a, b)
        if abs(prefactor) * 0.5 * (upper - lower) <= tol:
            break
        if K >= max_terms:
            raise ConvergenceError(
                f"series for theta needs more than {max_terms} terms to reach tol={tol}"
            )
        K = min(2 * K, max_terms)

    total = 0.0
    chunk = 1 << 20
    for start in range(1, K + 1, chunk):
        k = np.arange(start, min(start + chunk, K + 1), dtype=float)
        total += float(np.sum(1.0 / ((k + a) * (k + b))))
    return prefactor * (total + 0.5 * (upper + lower))


def fd_theta_stirling(n, z):
    """``theta(n)`` from the Stirling-level stationarity condition.

    Not monotone in ``n``; only useful as a parametric curve.
    """
    z = _checks.degeneracy(z)
    n = _interior(n)
    return math.log((1.0 - n) / n) + (1.0 / (1.0 - n) - 1.0 / n) / (2.0 * z)


def fd_occupation_corrected(theta, z):
    """Fermi-Dirac occupation with the first-order ``1/z`` correction.

    Returned unclamped; it leaves ``[0, 1]`` slightly for large ``|theta|``.
    """
    z = _checks.degeneracy(z)
    n0 = fd_classical(_checks.finite(theta, "theta"))
    return n0 - (1.0 - 2.0 * n0) / (2.0 * z)


def fd_occupation_exact(theta, z, tol=1e-12, maxiter=200):
    """Exact occupation of a fermion level at a given ``theta``.

    Returns exactly 0 for ``theta >= theta_max`` and exactly 1 for
    ``theta <= -theta_max``.
    """
    z = _checks.degeneracy(z)
    theta = _checks.finite(theta, "theta")
    tol = _checks.positive_tol(tol)
    tmax = harmonic(z)
    if theta >= tmax:
        return 0.0
    if theta <= -tmax:
        return 1.0
    if theta == 0.0:
        return 0.5
    if theta < 0.0:
        return 1.0 - fd_occupation_exact(-theta, z, tol, maxiter)
    return invert_decreasing(
        lambda n: _theta(n, z), lambda n: _dtheta(n, z), theta, 0.0, 0.5, tol, maxiter
    )


def fd_entropy_exact(n, z):
    """Entropy of the level, the log of its (gamma-function) statistical weight."""
    z = _checks.degeneracy(z)
    n = _closed(n)
    if n == 0.0 or n == 1.0:
        return 0.0
    return ln_gamma(z + 1.0) - ln_gamma(z * n + 1.0) - ln_gamma(z * (1.0 - n) + 1.0)


def fd_entropy_stirling(n, z):
    """Level entropy from Stirling's formula with the ``sqrt(2 pi N)`` term."""
    z = _checks.degeneracy(z)
    n = _interior(n)
    m = 1.0 - n
    return -z * (n * math.log(n) + m * math.log(m)) - 0.5 * math.log(2.0 * math.pi * z * n * m)


def fd_entropy_classical(n, z):
    """Conventional large-``z`` entropy ``-z [n ln n + (1 - n) ln(1 - n)]``."""
    z = _checks.degeneracy(z)
    n = _closed(n)
    return -z * (_xlogx(n) + _xlogx(1.0 - n))


def _xlogx(x):
    return x * math.log(x) if x > 0.0 else 0.0
