"""Grand-canonical thermodynamics of a discrete spectrum of levels.

Temperatures and chemical potentials are in energy units (k_B = 1).
``stat`` is ``"fermi"`` or ``"bose"``; ``method`` selects the occupation law:

``exact``
    roots of the psi-function equations, clamped outside their windows;
    entropy from the gamma-function statistical weights.
``corrected``
    Fermi-Dirac / Bose-Einstein with the first-order ``1/z`` correction;
    entropy from Stirling's formula with the ``sqrt(2 pi N)`` term.
``classical``
    plain Fermi-Dirac / Bose-Einstein with the conventional entropy.
"""

import math
from dataclasses import dataclass, field

from . import _checks, bose, fermi
from .errors import ConvergenceError, DomainError, InfeasibleError, NoSolutionError

__all__ = [
    "STATISTICS",
    "METHODS",
    "Level",
    "Spectrum",
    "Observables",
    "MuSolution",
    "CondensationResult",
    "occupations",
    "observables",
    "particle_number",
    "solve_mu",
    "bose_T1",
    "bose_TB",
    "maxwell_check",
]

STATISTICS = ("fermi", "bose")
METHODS = ("exact", "corrected", "classical")


@dataclass(frozen=True)
class Level:
    energy: float
    degeneracy: int

    def __post_init__(self):
        object.__setattr__(self, "energy", _checks.finite(self.energy, "energy"))
        object.__setattr__(self, "degeneracy", _checks.degeneracy(self.degeneracy))


@dataclass(frozen=True)
class Spectrum:
    """Levels with strictly increasing energies.

    Use :meth:`from_levels` to build one from unsorted input; it merges equal
    energies by adding their degeneracies.
    """

    levels: tuple

    def __post_init__(self):
        levels = tuple(self.levels)
        if not levels:
            raise DomainError("a spectrum needs at least one level")
        for lv in levels:
            if not isinstance(lv, Level):
                raise DomainError(f"expected Level, got {lv!r}")
        for a, b in zip(levels, levels[1:]):
            if not a.energy < b.energy:
                raise DomainError("level energies must be strictly increasing")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def from_levels(cls, levels):
        """Build from ``Level`` objects or ``(energy, degeneracy)`` pairs."""
        merged = {}
        for lv in levels:
            if not isinstance(lv, Level):
                lv = Level(*lv)
            merged[lv.energy] = merged.get(lv.energy, 0) + lv.degeneracy
        return cls(tuple(Level(e, z) for e, z in sorted(merged.items())))

    def __len__(self):
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    @property
    def energies(self):
        return [lv.energy for lv in self.levels]

    @property
    def degeneracies(self):
        return [lv.degeneracy for lv in self.levels]

    @property
    def capacity(self):
        """Total number of single-particle states."""
        return sum(self.degeneracies)


@dataclass(frozen=True)
class Observables:
    N: float
    E: float
    S: float
    Omega: float


@dataclass(frozen=True)
class MuSolution:
    """Chemical potential at fixed particle number.

    ``plateau`` is ``None`` unless N(mu) is flat at the target (exact
    fermions with every level full or empty), in which case it holds the
    whole interval of admissible ``mu`` and ``mu`` is its midpoint (or its
    finite end when the interval is unbounded).
    """

    mu: float
    plateau: tuple | None = None


@dataclass(frozen=True)
class CondensationResult:
    T_B: float
    mu_B: float
    occupations: list
    active_levels: list = field(default_factory=list)


def _check_stat_method(stat, method):
    if stat not in STATISTICS:
        raise DomainError(f"statistics must be one of {STATISTICS}, got {stat!r}")
    if method not in METHODS:
        raise DomainError(f"method must be one of {METHODS}, got {method!r}")


def _check_T(T):
    T = float(T)
    if not (T > 0.0) or not math.isfinite(T):
        raise DomainError(f"temperature must be finite and > 0, got {T!r}")
    return T


def _level_occupation(theta, z, stat, method, tol):
    if stat == "fermi":
        if method == "exact":
            return fermi.fd_occupation_exact(theta, z, tol)
        if method == "corrected":
            return fermi.fd_occupation_corrected(theta, z)
        return fermi.fd_classical(theta)
    if method == "exact":
        # z = 1: theta_max = 0, so any theta > 0 lies beyond the window
        if z == 1:
            return 0.0
        return bose.be_occupation_exact(theta, z, tol)
    if method == "corrected":
        return bose.be_occupation_corrected(theta, z)
    return bose.be_classical(theta)


def occupations(spectrum, T, mu, stat, method="exact", tol=1e-12):
    """Per-state populations ``n_j`` of every level at ``(T, mu)``.

    The ``corrected`` method returns raw values, which may fall slightly
    outside the physical range.
    """
    _check_stat_method(stat, method)
    T = _check_T(T)
    mu = _checks.finite(mu, "mu")
    if stat == "bose" and not mu < spectrum.levels[0].energy:
        raise DomainError(
            f"bosons need mu < lowest level energy {spectrum.levels[0].energy!r}, got mu={mu!r}"
        )
    return [
        _level_occupation((lv.energy - mu) / T, lv.degeneracy, stat, method, tol)
        for lv in spectrum.levels
    ]


def particle_number(spectrum, T, mu, stat, method="exact", tol=1e-12):
    """Total ``N = sum_j z_j n_j`` at ``(T, mu)``."""
    ns = occupations(spectrum, T, mu, stat, method, tol)
    return math.fsum(lv.degeneracy * n for lv, n in zip(spectrum.levels, ns))


def _level_entropy(n, z, stat, method):
    if stat == "fermi":
        if method == "exact":
            return fermi.fd_entropy_exact(n, z)
        if method == "classical":
            return fermi.fd_entropy_classical(n, z)
        if n == 0.0 or n == 1.0:
            return 0.0
        return fermi.fd_entropy_stirling(n, z)
    if method == "exact":
        return bose.be_entropy_exact(n, z)
    if method == "classical":
        return bose.be_entropy_classical(n, z)
    if n == 0.0 or z == 1:
        return 0.0
    return bose.be_entropy_stirling(n, z)


def observables(spectrum, T, mu, stat, method="exact", tol=1e-12):
    """Totals ``N``, ``E``, ``S`` and ``Omega = E - T S - mu N`` at ``(T, mu)``."""
    ns = occupations(spectrum, T, mu, stat, method, tol)
    T = float(T)
    mu = float(mu)
    if method == "corrected":
        upper = 1.0 if stat == "fermi" else math.inf
        bad = [j for j, n in enumerate(ns) if not 0.0 <= n <= upper]
        if bad:
            raise DomainError(
                f"corrected occupations outside the physical range at levels {bad}; "
                "thermodynamics undefined there"
            )
    zs = spectrum.degeneracies
    N = math.fsum(z * n for z, n in zip(zs, ns))
    E = math.fsum(lv.energy * lv.degeneracy * n for lv, n in zip(spectrum.levels, ns))
    S = math.fsum(_level_entropy(n, z, stat, method) for z, n in zip(zs, ns))
    return Observables(N=N, E=E, S=S, Omega=E - T * S - mu * N)


def _bisect_mu(count, target, lo, hi, strict):
    """Bisect for the edge of ``{mu : count(mu) >= target}`` (``strict``: ``>``).

    ``lo`` fails the predicate and ``hi`` satisfies it on entry.
    """
    def ok(x):
        c = count(x)
        return c > target if strict else c >= target

    for _ in range(400):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def solve_mu(spectrum, T, N_target, stat, method="exact", tol=1e-12):
    """Chemical potential giving total particle number ``N_target`` at ``T``.

    N(mu) is nondecreasing, so the answer is found by bisection on ``mu``.
    Returns a :class:`MuSolution`.
    """
    _check_stat_method(stat, method)
    T = _check_T(T)
    N_target = _checks.finite(N_target, "N_target")
    tol = _checks.positive_tol(tol)
    if not N_target > 0.0:
        raise InfeasibleError(f"N_target must be > 0, got {N_target!r}")

    e_min = spectrum.levels[0].energy
    e_max = spectrum.levels[-1].energy

    def count(mu):
        return particle_number(spectrum, T, mu, stat, method, tol)

    if stat == "fermi":
        cap = spectrum.capacity
        if N_target > cap:
            raise InfeasibleError(
                f"N_target={N_target} exceeds the capacity {cap} "
                f"(level capacities {spectrum.degeneracies})"
            )
        if N_target == cap and method != "exact":
            raise InfeasibleError(
                f"N_target equals the capacity {cap}; {method} occupations only reach it as mu -> inf"
            )
        hi = e_max + T
        step = T
        while count(hi) < N_target:
            step *= 2.0
            hi = e_max + step
            if step > 1e300:
                raise ConvergenceError("could not bracket mu from above")
    else:
        hi = e_min  # N -> inf as mu -> e_min for z_1 >= 2 (exact) and always otherwise
    lo = e_min - T
    step = T
    while count(lo) >= N_target:
        step *= 2.0
        lo = e_min - step
        if step > 1e300:
            raise ConvergenceError("could not bracket mu from below")

    if stat == "bose":
        def count_bose(mu):
            return math.inf if mu >= e_min else count(mu)
        a_lo, a_hi = _bisect_mu(count_bose, N_target, lo, hi, strict=False)
        if a_hi >= e_min:
            if count(a_lo) < N_target - tol:
                raise InfeasibleError(
                    f"N_target={N_target} cannot be reached below mu = {e_min}; "
                    "the ground level has degeneracy 1 and no occupation equation"
                )
            return MuSolution(a_lo)
        return MuSolution(_closest(count, N_target, a_lo, a_hi, tol))

    a_lo, a_hi = _bisect_mu(count, N_target, lo, hi, strict=False)
    if method == "exact":
        ns = occupations(spectrum, T, a_hi, stat, method, tol)
        if all(n == 0.0 or n == 1.0 for n in ns) and count(a_hi) == N_target:
            if N_target == spectrum.capacity:
                return MuSolution(a_hi, (a_hi, math.inf))
            b_lo, _ = _bisect_mu(count, N_target, a_hi, hi, strict=True)
            return MuSolution(0.5 * (a_hi + b_lo), (a_hi, b_lo))
    return MuSolution(_closest(count, N_target, a_lo, a_hi, tol))


def _closest(count, target, lo, hi, tol):
    c_lo = count(lo)
    c_hi = count(hi)
    best, err = (lo, target - c_lo) if target - c_lo <= c_hi - target else (hi, c_hi - target)
    if err > max(tol, 1e-12 * target):
        raise ConvergenceError(
            f"N(mu) could not be matched to within tol={tol}: bracket [{lo!r}, {hi!r}] "
            f"gives N in [{c_lo!r}, {c_hi!r}], target {target!r}"
        )
    return best


def _require_bose_pair(spectrum):
    if len(spectrum) < 2:
        raise DomainError("need at least two levels")


def bose_T1(spectrum, N_target):
    """Temperature at which the second boson level starts to fill.

    Below it all ``N_target`` particles sit in the ground level.
    """
    _require_bose_pair(spectrum)
    N_target = _checks.finite(N_target, "N_target")
    if not N_target > 0.0:
        raise DomainError(f"N_target must be > 0, got {N_target!r}")
    l1, l2 = spectrum.levels[0], spectrum.levels[1]
    _checks.degeneracy(l2.degeneracy, minimum=2)
    denom = bose.be_theta_max(l2.degeneracy) - bose.be_theta_exact(N_target / l1.degeneracy, l1.degeneracy)
    if not denom > 0.0:
        raise NoSolutionError(
            f"the second level never starts filling before the ground level saturates (denominator {denom!r} <= 0)"
        )
    return (l2.energy - l1.energy) / denom


def _excited_populations(spectrum, T, tol):
    l1 = spectrum.levels[0]
    tmax1 = bose.be_theta_max(l1.degeneracy)
    ns = []
    for lv in spectrum.levels[1:]:
        theta = (lv.energy - l1.energy) / T + tmax1
        ns.append(bose.be_occupation_exact(theta, lv.degeneracy, tol))
    return ns


def _excited_count(spectrum, T, tol):
    ns = _excited_populations(spectrum, T, tol)
    return math.fsum(lv.degeneracy * n for lv, n in zip(spectrum.levels[1:], ns))


def bose_TB(spectrum, N_target, tol=1e-12, max_doublings=40):
    """Temperature at which the exact ground-level population reaches zero.

    With ``mu_B = e_1 - T_B * theta_max(z_1)`` every excited level sits at
    ``theta_j = (e_j - e_1)/T_B + theta_max(z_1)``; ``T_B`` is where their
    populations add up to ``N_target``.  Raises :class:`NoSolutionError`
    when no positive temperature achieves that.
    """
    _require_bose_pair(spectrum)
    N_target = _checks.finite(N_target, "N_target")
    tol = _checks.positive_tol(tol)
    if not N_target > 0.0:
        raise DomainError(f"N_target must be > 0, got {N_target!r}")
    for lv in spectrum.levels[1:]:
        _checks.degeneracy(lv.degeneracy, minimum=2)
    l1 = spectrum.levels[0]
    tmax1 = bose.be_theta_max(l1.degeneracy)

    def excess(T):
        return _excited_count(spectrum, T, tol) - N_target

    # T -> inf drives every theta_j down to theta_max(z_1), the supremum of the excited count
    sup = excess(math.inf)
    if not sup > 0.0:
        raise NoSolutionError(
            f"no finite T_B: even as T -> inf the excited levels hold only "
            f"{sup + N_target!r} < N={N_target!r} particles at mu_B = e_1 - T*theta_1max"
        )

    try:
        T_lo = bose_T1(spectrum, N_target)
    except NoSolutionError:
        T_lo = (spectrum.levels[1].energy - l1.energy) / max(
            bose.be_theta_max(lv.degeneracy) for lv in spectrum.levels[1:]
        )
    while excess(T_lo) >= 0.0:
        T_lo *= 0.5
    T_hi = 2.0 * T_lo
    cap = T_lo * 2.0**max_doublings
    while excess(T_hi) < 0.0:
        T_hi *= 2.0
        if T_hi > cap:
            raise NoSolutionError(f"no finite T_B below {cap!r}")

    for _ in range(400):
        mid = 0.5 * (T_lo + T_hi)
        if mid <= T_lo or mid >= T_hi or T_hi - T_lo <= tol * T_hi:
            break
        if excess(mid) < 0.0:
            T_lo = mid
        else:
            T_hi = mid
    T_B = T_lo if -excess(T_lo) <= excess(T_hi) else T_hi
    mu_B = l1.energy - T_B * tmax1
    ns = [0.0] + _excited_populations(spectrum, T_B, tol)
    active = [j for j, n in enumerate(ns) if n > 0.0]
    return CondensationResult(T_B=T_B, mu_B=mu_B, occupations=ns, active_levels=active)


def maxwell_check(spectrum, T, mu, stat, method="exact", dT=1e-4, dmu=1e-4, tol=1e-12):
    """Residuals of ``dOmega = -S dT - N dmu`` by central differences.

    Returns ``(|dOmega/dT + S|, |dOmega/dmu + N|)``.
    """
    T = _check_T(T)
    if not T - dT > 0.0:
        raise DomainError(f"T - dT must be > 0, got {T - dT!r}")

    def omega(t, m):
        return observables(spectrum, t, m, stat, method, tol).Omega

    obs = observables(spectrum, T, mu, stat, method, tol)
    dOdT = (omega(T + dT, mu) - omega(T - dT, mu)) / (2.0 * dT)
    dOdmu = (omega(T, mu + dmu) - omega(T, mu - dmu)) / (2.0 * dmu)
    return abs(dOdT + obs.S), abs(dOdmu + obs.N)
