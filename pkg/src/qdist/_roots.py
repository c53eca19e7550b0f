"""Safeguarded Newton iteration for inverting monotone decreasing functions."""

from .errors import ConvergenceError


def invert_decreasing(func, deriv, target, lo, hi, tol=1e-12, maxiter=200):
    """Solve ``func(x) == target`` for ``x`` in ``[lo, hi]``.

    ``func`` must be strictly decreasing with ``func(lo) >= target >= func(hi)``.
    Newton steps are taken while they stay inside the current bracket and
    shrink it fast enough; otherwise the bracket is bisected.  Iteration stops
    once the bracket (or last step) is below ``tol * max(1, |x|)``.
    """
    if lo > hi:
        lo, hi = hi, lo
    x = 0.5 * (lo + hi)
    step_old = hi - lo
    for _ in range(maxiter):
        g = func(x) - target
        if g == 0.0:
            return x
        if g > 0.0:
            lo = x
        else:
            hi = x
        scale = tol * max(1.0, abs(x))
        if hi - lo <= scale:
            return 0.5 * (lo + hi)

        dg = deriv(x)
        newton = x - g / dg if dg < 0.0 else None
        if newton is not None and lo < newton < hi and abs(newton - x) < 0.5 * step_old:
            step_old = abs(newton - x)
            x = newton
            if step_old <= scale:
                return x
        else:
            step_old = hi - lo
            x = 0.5 * (lo + hi)
    raise ConvergenceError(
        f"inversion did not converge in {maxiter} iterations (bracket [{lo!r}, {hi!r}])"
    )
