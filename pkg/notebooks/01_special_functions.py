"""Special functions behind the exact distributions.

Factorials of small, non-integer arguments are what the exact occupation
formulas are made of, so everything rests on ln Γ, ψ and ψ'.  This script
compares the crude and refined Stirling forms with the exact log-factorial
and runs the identity battery that the ``check-specfun`` command reports.
"""

import math

import numpy as np

from qdist import battery, specfun

# %% Stirling versus the exact factorial
print("N    ln N! exact   crude err %   Stirling err %")
for N in (2, 4, 8, 16, 32, 64):
    exact = specfun.ln_factorial_exact(N)
    crude = 100 * (exact - specfun.ln_factorial_crude(N)) / exact
    refined = 100 * (exact - specfun.ln_factorial_stirling(N)) / exact
    print(f"{N:<4d} {exact:12.6f} {crude:12.4f} {refined:14.6f}")

# %% Digamma near the origin and in the asymptotic range
xs = np.array([1e-6, 0.25, 0.5, 1.0, 2.0, 10.0, 1e6])
print("\nx          psi(x)              ln x - 1/(2x)")
for x in xs:
    print(f"{x:<10.3g} {specfun.digamma(x):<19.12g} {math.log(x) - 0.5 / x:.12g}")

# %% Harmonic numbers are psi at integers shifted by Euler's constant
for n in (1, 5, 20):
    print(f"H_{n} = {specfun.harmonic(n):.12f}  psi({n + 1}) + gamma = {specfun.digamma(n + 1) + specfun.EULER_GAMMA:.12f}")

# %% Identity battery
print()
for check in battery.identity_battery():
    print(f"{'pass' if check.passed else 'FAIL'}  {check.residual:9.2e}  {check.name}")
