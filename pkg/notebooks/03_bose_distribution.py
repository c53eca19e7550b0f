"""Bose–Einstein occupation of a level with finite degeneracy z.

The exact boson occupation vanishes for θ ≥ H_{z−1} and diverges like
(z−1)/(zθ) rather than 1/θ as θ → 0.  At large z the gap to the classical
curve closes like (1 + 2n)/(2z), so a z = 1000 level is still visibly off
the Bose function near θ = 0.
"""

import numpy as np

from qdist import bose

thetas = np.array([0.1, 0.2, 0.5, 1.0, 1.5, 2.0, 3.0])
zs = (2, 5, 20, 1000)

# %% Exact occupations against the classical curve
print("theta   classical  " + "  ".join(f"exact z={z:<4d}" for z in zs))
for t in thetas:
    row = "  ".join(f"{bose.be_occupation_exact(t, z):11.6f}" for z in zs)
    print(f"{t:5.2f}  {bose.be_classical(t):10.6f}  {row}")

# %% Cut-off of the exact occupation
print()
for z in zs:
    print(f"z={z:<5d} n = 0 for theta >= {bose.be_theta_max(z):.6f}")

# %% Small-theta law and the 1/z gap
for z in (2, 10):
    t = 1e-4
    print(f"z={z}: theta*n at theta=1e-4 is {t * bose.be_occupation_exact(t, z):.5f}, (z-1)/z = {(z - 1) / z:.5f}")
z = 1000
print(f"\nz={z}: gap to classical versus (1 + 2n)/(2z)")
for t in thetas:
    n0 = bose.be_classical(t)
    print(f"  theta={t:4.2f} gap={n0 - bose.be_occupation_exact(t, z):.4e} predicted={(1 + 2 * n0) / (2 * z):.4e}")
