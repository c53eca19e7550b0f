"""Log-gamma, digamma, trigamma and log-factorial approximations.

All gamma-family functions are evaluated by the same scheme: the argument is
shifted upward with the recurrence Gamma(x + 1) = x Gamma(x) until it reaches
``_SHIFT_THRESHOLD``, then the asymptotic (Stirling/de Moivre) series with
Bernoulli-number coefficients is summed.  Only real, strictly positive
arguments are supported.
"""

import math

from .errors import DomainError

__all__ = [
    "EULER_GAMMA",
    "ln_gamma",
    "digamma",
    "trigamma",
    "harmonic",
    "ln_factorial_exact",
    "ln_factorial_crude",
    "ln_factorial_stirling",
]

EULER_GAMMA = 0.57721566490153286060651209008240243

_SHIFT_THRESHOLD = 10.0
_HALF_LN_2PI = 0.5 * math.log(2.0 * math.pi)

# B_2, B_4, ..., B_18
_BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
)


def _check_positive(x, name="x"):
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} must be finite and > 0, got {x!r}")
    return x


def _shift_count(x):
    if x >= _SHIFT_THRESHOLD:
        return 0
    return int(math.ceil(_SHIFT_THRESHOLD - x))


def ln_gamma(x):
    """Natural logarithm of the gamma function for real ``x > 0``."""
    x = _check_positive(x)
    if x == 1.0 or x == 2.0:
        return 0.0
    m = _shift_count(x)
    prod = 1.0
    for i in range(m):
        prod *= x + i
    y = x + m

    inv = 1.0 / y
    inv2 = inv * inv
    series = 0.0
    power = inv
    for k, b in enumerate(_BERNOULLI_EVEN, start=1):
        series += b / (2 * k * (2 * k - 1)) * power
        power *= inv2
    value = (y - 0.5) * math.log(y) - y + _HALF_LN_2PI + series
    if m:
        value -= math.log(prod)
    return value


def digamma(x):
    """Digamma (psi) function, the logarithmic derivative of Gamma."""
    x = _check_positive(x)
    m = _shift_count(x)
    shift = math.fsum(1.0 / (x + i) for i in range(m))
    y = x + m

    inv2 = 1.0 / (y * y)
    series = 0.0
    power = inv2
    for k, b in enumerate(_BERNOULLI_EVEN, start=1):
        series += b / (2 * k) * power
        power *= inv2
    return math.log(y) - 0.5 / y - series - shift


def trigamma(x):
    """First derivative of the digamma function; positive for all ``x > 0``."""
    x = _check_positive(x)
    m = _shift_count(x)
    shift = math.fsum(1.0 / ((x + i) * (x + i)) for i in range(m))
    y = x + m

    inv = 1.0 / y
    inv2 = inv * inv
    series = 0.0
    power = inv2 * inv
    for b in _BERNOULLI_EVEN:
        series += b * power
        power *= inv2
    return inv + 0.5 * inv2 + series + shift


def harmonic(n):
    """Harmonic number ``1 + 1/2 + ... + 1/n`` by direct summation."""
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"n must be an integer, got {n!r}")
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return math.fsum(1.0 / k for k in range(1, n + 1))


def ln_factorial_exact(N):
    """``ln N!`` for real ``N >= 0`` via ``ln Gamma(N + 1)``."""
    N = float(N)
    if not math.isfinite(N) or N < 0.0:
        raise DomainError(f"N must be finite and >= 0, got {N!r}")
    return ln_gamma(N + 1.0)


def ln_factorial_crude(N):
    """Leading Stirling approximation ``N ln(N/e)``."""
    N = _check_positive(N, "N")
    return N * (math.log(N) - 1.0)


def ln_factorial_stirling(N):
    """Stirling approximation including the ``ln sqrt(2 pi N)`` term."""
    N = _check_positive(N, "N")
    return N * (math.log(N) - 1.0) + 0.5 * math.log(2.0 * math.pi * N)
