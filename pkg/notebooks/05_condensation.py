"""Condensation temperatures of a boson spectrum with finite degeneracies.

Below T₁ only the ground level is occupied.  With exact occupations the
ground level can also empty completely at a finite temperature T_B, if the
excited levels have enough room.
"""

from qdist.ensemble import Spectrum, bose_T1, bose_TB, solve_mu, occupations
from qdist.errors import NoSolutionError

# %% T1: second level starts filling
sp = Spectrum.from_levels([(0.0, 2), (1.0, 20)])
N = 1.0
T1 = bose_T1(sp, N)
for T in (0.99 * T1, 1.01 * T1):
    mu = solve_mu(sp, T, N, "bose").mu
    print(f"T={T:.5f} occupations={occupations(sp, T, mu, 'bose')}")

# %% T_B: ground level fully drained
res = bose_TB(sp, N)
print(f"\nT1 = {T1:.6f}, T_B = {res.T_B:.6f}, mu_B = {res.mu_B:.6f}, n = {res.occupations}")

# %% Scaling: doubling the gap doubles T_B
wide = Spectrum.from_levels([(0.0, 2), (2.0, 20)])
print(f"gap 2: T_B = {bose_TB(wide, N).T_B:.6f}")

# %% A spectrum without a finite T_B
small = Spectrum.from_levels([(0.0, 2), (1.0, 2)])
try:
    bose_TB(small, 2.0)
except NoSolutionError as exc:
    print(f"\n(0,2),(1,2) with N=2: {exc}")
