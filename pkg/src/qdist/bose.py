"""Occupation numbers and entropies of a boson level of degeneracy ``z``.

The exact relation between the per-state population ``n >= 0`` and
``theta = (energy - mu) / T`` is

    theta(n) = psi(z n + z) - psi(z n + 1),

strictly decreasing for ``z >= 2`` from ``theta_max = H_{z-1}`` at ``n = 0``
towards 0 as ``n -> inf`` (where ``n ~ (z - 1) / (z theta)``).  For
``theta >= theta_max`` the exact occupation is exactly zero.  A level with
``z = 1`` has ``theta(n) == 0`` and no occupation equation at all.
"""

import math

from . import _checks
from ._roots import invert_decreasing
from .errors import ConvergenceError, DomainError
from .specfun import digamma, harmonic, ln_gamma, trigamma

__all__ = [
    "be_classical",
    "be_theta_exact",
    "be_theta_finite_sum",
    "be_theta_stirling",
    "be_occupation_corrected",
    "be_occupation_exact",
    "be_theta_max",
    "be_entropy_exact",
    "be_entropy_stirling",
    "be_entropy_classical",
]


def _positive_n(n):
    n = float(n)
    if not (n > 0.0) or not math.isfinite(n):
        raise DomainError(f"occupation must be finite and > 0, got {n!r}")
    return n


def _nonnegative_n(n):
    n = float(n)
    if not (n >= 0.0) or not math.isfinite(n):
        raise DomainError(f"occupation must be finite and >= 0, got {n!r}")
    return n


def _positive_theta(theta):
    theta = float(theta)
    if not (theta > 0.0):
        raise DomainError(f"theta must be > 0 for bosons, got {theta!r}")
    return theta


def be_classical(theta):
    """Bose-Einstein occupation ``1 / (exp(theta) - 1)``, ``theta > 0``."""
    theta = _positive_theta(theta)
    return 1.0 / math.expm1(theta)


def _theta(n, z):
    return digamma(z * n + z) - digamma(z * n + 1.0)


def _dtheta(n, z):
    return z * (trigamma(z * n + z) - trigamma(z * n + 1.0))


def be_theta_exact(n, z):
    """Exact ``theta`` at which a level of degeneracy ``z`` has population ``n``."""
    z = _checks.degeneracy(z)
    n = _positive_n(n)
    if z == 1:
        return 0.0
    return _theta(n, z)


def be_theta_finite_sum(n, z):
    """Exact ``theta(n)`` written as the finite sum ``sum_{k=1}^{z-1} 1/(zn + z - k)``."""
    z = _checks.degeneracy(z)
    n = _positive_n(n)
    zn = z * n
    return math.fsum(1.0 / (zn + z - k) for k in range(1, z))


def be_theta_stirling(n, z):
    """``theta(n)`` from the Stirling-level stationarity condition (parametric only)."""
    z = _checks.degeneracy(z)
    n = _positive_n(n)
    top = z + z * n - 1.0
    return math.log(top / (z * n)) + (z / top - 1.0 / n) / (2.0 * z)


def be_theta_max(z):
    """Upper edge of the occupied window, ``psi(z) - psi(1) = H_{z-1}``."""
    z = _checks.degeneracy(z)
    return harmonic(z - 1) if z > 1 else 0.0


def be_occupation_corrected(theta, z):
    """Bose-Einstein occupation with the first-order ``1/z`` correction (unclamped)."""
    z = _checks.degeneracy(z)
    n0 = be_classical(theta)
    return n0 - (1.0 + 2.0 * n0) / (2.0 * z)


def be_occupation_exact(theta, z, tol=1e-12, maxiter=200):
    """Exact population of a boson level (``z >= 2``) at a given ``theta > 0``.

    Exactly 0 for ``theta >= theta_max``; otherwise the root of
    ``theta(n) = theta`` to relative accuracy ``tol``.
    """
    z = _checks.degeneracy(z, minimum=2)
    theta = _positive_theta(_checks.finite(theta, "theta"))
    tol = _checks.positive_tol(tol)
    if theta >= harmonic(z - 1):
        return 0.0

    hi = max(1.0, 2.0 * (z - 1) / (z * theta))
    for _ in range(1100):
        if _theta(hi, z) < theta:
            break
        hi *= 2.0
    else:
        raise ConvergenceError(f"could not bracket the occupation for theta={theta!r}, z={z}")
    return invert_decreasing(
        lambda n: _theta(n, z), lambda n: _dtheta(n, z), theta, 0.0, hi, tol, maxiter
    )


def be_entropy_exact(n, z):
    """Entropy of the level, the log of its (gamma-function) statistical weight."""
    z = _checks.degeneracy(z)
    n = _nonnegative_n(n)
    if n == 0.0 or z == 1:
        return 0.0
    return ln_gamma(z * n + z) - ln_gamma(z * n + 1.0) - ln_gamma(z)


def be_entropy_stirling(n, z):
    """Level entropy from Stirling's formula with the ``sqrt(2 pi N)`` terms."""
    z = _checks.degeneracy(z, minimum=2)
    n = _positive_n(n)
    top = z + z * n - 1.0
    zn = z * n
    zm = z - 1.0
    two_pi = 2.0 * math.pi
    return (
        top * math.log(top)
        - zn * math.log(zn)
        - zm * math.log(zm)
        + 0.5 * math.log(two_pi * top)
        - 0.5 * math.log(two_pi * zn)
        - 0.5 * math.log(two_pi * zm)
    )


def be_entropy_classical(n, z):
    """Conventional large-``z`` entropy ``z [(1 + n) ln(1 + n) - n ln n]``."""
    z = _checks.degeneracy(z)
    n = _nonnegative_n(n)
    if n == 0.0:
        return 0.0
    return z * ((1.0 + n) * math.log1p(n) - n * math.log(n))
