"""Fermi–Dirac occupation of a level with finite degeneracy z.

For small z the exact occupation is a steeper curve than the textbook
Fermi function: it reaches exactly 0 and 1 at a finite |θ| = H_z, where
θ = (ε − μ)/T.  The corrected formula with a 1/z term sits between the two,
and all three agree as z grows.
"""

import numpy as np

from qdist import fermi

thetas = np.linspace(-3, 3, 13)

# %% Exact occupations for several degeneracies next to the classical curve
zs = (2, 4, 10, 100)
print("theta   classical  " + "  ".join(f"exact z={z:<4d}" for z in zs))
for t in thetas:
    row = "  ".join(f"{fermi.fd_occupation_exact(t, z):11.6f}" for z in zs)
    print(f"{t:6.2f}  {fermi.fd_classical(t):9.6f}  {row}")

# %% Where the occupation saturates: theta_max = H_z
print()
for z in zs:
    print(f"z={z:<4d} occupation is exactly 0 or 1 for |theta| >= {fermi.fd_theta_max(z):.6f}")

# %% The corrected formula tracks the exact curve much better than the classical one
z = 10
exact = np.array([fermi.fd_occupation_exact(t, z) for t in thetas])
corrected = np.array([fermi.fd_occupation_corrected(t, z) for t in thetas])
classical = np.array([fermi.fd_classical(t) for t in thetas])
print(f"\nz={z}: max |corrected - exact| = {np.max(np.abs(corrected - exact)):.2e}, "
      f"max |classical - exact| = {np.max(np.abs(classical - exact)):.2e}")

# %% Entropy per level: exact, Stirling and conventional forms
print("\nn      S exact   S Stirling  S classical  (z = 10)")
for n in (0.1, 0.3, 0.5, 0.7, 0.9):
    print(f"{n:.1f}  {fermi.fd_entropy_exact(n, z):9.5f} {fermi.fd_entropy_stirling(n, z):11.5f} "
          f"{fermi.fd_entropy_classical(n, z):11.5f}")
