"""Quantum distribution functions for systems with an arbitrary number of particles."""

from .errors import ConvergenceError, DomainError, InfeasibleError, NoSolutionError, QdistError
from .specfun import (
    EULER_GAMMA,
    digamma,
    harmonic,
    ln_factorial_crude,
    ln_factorial_exact,
    ln_factorial_stirling,
    ln_gamma,
    trigamma,
)
from .fermi import (
    fd_classical,
    fd_entropy_classical,
    fd_entropy_exact,
    fd_entropy_stirling,
    fd_occupation_corrected,
    fd_occupation_exact,
    fd_theta_exact,
    fd_theta_max,
    fd_theta_series,
    fd_theta_stirling,
)
from .bose import (
    be_classical,
    be_entropy_classical,
    be_entropy_exact,
    be_entropy_stirling,
    be_occupation_corrected,
    be_occupation_exact,
    be_theta_exact,
    be_theta_finite_sum,
    be_theta_max,
    be_theta_stirling,
)
from .ensemble import (
    CondensationResult,
    Level,
    MuSolution,
    Observables,
    Spectrum,
    bose_T1,
    bose_TB,
    maxwell_check,
    observables,
    occupations,
    particle_number,
    solve_mu,
)

__version__ = "0.1.0"
