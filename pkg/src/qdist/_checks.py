import math

from .errors import DomainError


def degeneracy(z, minimum=1):
    """Validate a level degeneracy and return it as ``int``."""
    if isinstance(z, bool):
        raise DomainError(f"degeneracy must be an integer, got {z!r}")
    try:
        zi = int(z)
    except (TypeError, ValueError, OverflowError):
        raise DomainError(f"degeneracy must be an integer, got {z!r}") from None
    if zi != z:
        raise DomainError(f"degeneracy must be an integer, got {z!r}")
    if zi < minimum:
        raise DomainError(f"degeneracy must be >= {minimum}, got {zi}")
    return zi


def finite(x, name):
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def positive_tol(tol):
    tol = float(tol)
    if not (tol > 0.0) or not math.isfinite(tol):
        raise DomainError(f"tol must be finite and > 0, got {tol!r}")
    return tol
