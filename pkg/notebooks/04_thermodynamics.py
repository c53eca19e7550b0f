"""Thermodynamics of a small spectrum: chemical potential, entropy, Ω.

With exact occupations a fermion system at low temperature fills whole
levels, and the chemical potential is not unique between shells.  When a
level is partially filled the entropy tends to ln C(z, N) instead of 0.
"""

import math

import numpy as np

from qdist.ensemble import Spectrum, maxwell_check, observables, solve_mu

sp = Spectrum.from_levels([(0.0, 2), (1.0, 2)])

# %% Three fermions on two doubly-degenerate levels: half-filled top level
for T in (1.0, 0.1, 0.01, 1e-3):
    sol = solve_mu(sp, T, 3.0, "fermi")
    obs = observables(sp, T, sol.mu, "fermi")
    print(f"T={T:<6g} mu={sol.mu:.6f} S={obs.S:.6f} (ln 2 = {math.log(2):.6f})")

# %% Two fermions fill the ground level exactly: a plateau in mu, S = 0
sol = solve_mu(sp, 0.01, 2.0, "fermi")
print(f"\nN=2, T=0.01: mu plateau {sol.plateau}, midpoint {sol.mu:.4f}, "
      f"S = {observables(sp, 0.01, sol.mu, 'fermi').S:.2e}")

# %% Temperature sweep comparing methods; the 1/z-corrected formula needs
# larger degeneracies to stay inside the physical range, so use z = 20 and moderate temperatures
wide = Spectrum.from_levels([(0.0, 20), (1.0, 20)])
print("\nT      S exact    S corrected  S classical  (z = 20, N = 30)")
for T in np.linspace(1.0, 3.0, 5):
    values = []
    for method in ("exact", "corrected", "classical"):
        mu = solve_mu(wide, T, 30.0, "fermi", method=method).mu
        values.append(observables(wide, T, mu, "fermi", method=method).S)
    print(f"{T:4.2f}  " + "  ".join(f"{v:10.6f}" for v in values))

# %% dΩ = −S dT − N dμ, checked by central differences
for stat, mu in (("fermi", 0.5), ("bose", -0.5)):
    rS, rN = maxwell_check(sp, 1.0, mu, stat, "exact", 1e-4, 1e-4)
    print(f"{stat}: residuals |dOmega/dT + S| = {rS:.1e}, |dOmega/dmu + N| = {rN:.1e}")
