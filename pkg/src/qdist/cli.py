"""Command-line interface.

Exit codes: 0 success, 1 failed self-check, 2 usage error,
3 domain error or infeasible request, 4 non-convergence.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import bose, ensemble, fermi
from .battery import identity_battery
from .errors import ConvergenceError, DomainError, InfeasibleError, NoSolutionError
from .spectrum_io import read_spectrum

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4

PARAMETRIC_EPS = 1e-4
BOSE_N_CAP = 10.0


class UsageError(Exception):
    pass


def fmt(x):
    """Fixed 12-significant-digit rendering used for every numeric cell."""
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def _json_value(x):
    if x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return int(x)
    x = float(x)
    if not math.isfinite(x):
        return fmt(x)
    return float(fmt(x))


class Table:
    def __init__(self, command, meta, columns, rows, notes=()):
        self.command = command
        self.meta = meta
        self.columns = columns
        self.rows = rows
        self.notes = list(notes)

    def render(self, fmt_name):
        if fmt_name == "json":
            doc = {
                "command": self.command,
                "meta": {k: _json_value(v) for k, v in self.meta.items()},
                "columns": list(self.columns),
                "rows": [[_json_value(v) for v in row] for row in self.rows],
                "notes": self.notes,
            }
            return json.dumps(doc, indent=2) + "\n"
        head = " ".join(f"{k}={fmt(v)}" for k, v in self.meta.items())
        lines = [f"# command={self.command} {head}".rstrip()]
        lines += [f"# {note}" for note in self.notes]
        lines.append(",".join(self.columns))
        lines += [",".join(fmt(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def _grid(lo, hi, points):
    if points < 2:
        raise UsageError("--points must be >= 2")
    return np.linspace(lo, hi, points)


def cmd_curve(args):
    stat, method, z = args.stat, args.method, args.z
    if method not in ("exact", "corrected", "classical", "stirling-parametric"):
        raise UsageError(f"curve does not support --method {method}")
    if z < 1:
        raise UsageError("--z must be >= 1")
    if stat == "bose" and method == "exact" and z < 2:
        raise UsageError("exact Bose curves need --z >= 2")
    meta = {"stat": stat, "z": z, "method": method}
    rows = []
    if method == "stirling-parametric":
        hi = 1.0 - PARAMETRIC_EPS if stat == "fermi" else BOSE_N_CAP
        ns = _grid(PARAMETRIC_EPS, hi, args.points)
        theta_of = fermi.fd_theta_stirling if stat == "fermi" else bose.be_theta_stirling
        rows = [(theta_of(n, z), n) for n in ns]
        meta.update(n_min=PARAMETRIC_EPS, n_max=hi, points=args.points)
        return Table("curve", meta, ("theta", "n"), rows)

    t_min = args.theta_min if args.theta_min is not None else (-3.0 if stat == "fermi" else 0.1)
    t_max = args.theta_max if args.theta_max is not None else 3.0
    if not t_min <= t_max:
        raise UsageError("--theta-min must not exceed --theta-max")
    if stat == "bose" and t_min <= 0.0:
        raise UsageError("Bose curves need --theta-min > 0")
    if stat == "fermi":
        law = {
            "exact": lambda t: fermi.fd_occupation_exact(t, z, args.tol),
            "corrected": lambda t: fermi.fd_occupation_corrected(t, z),
            "classical": fermi.fd_classical,
        }[method]
        lo_clip, hi_clip = 0.0, 1.0
    else:
        law = {
            "exact": lambda t: bose.be_occupation_exact(t, z, args.tol),
            "corrected": lambda t: bose.be_occupation_corrected(t, z),
            "classical": bose.be_classical,
        }[method]
        lo_clip, hi_clip = 0.0, math.inf
    for t in _grid(t_min, t_max, args.points):
        n = law(float(t))
        if args.clamp and method == "corrected":
            n = min(max(n, lo_clip), hi_clip)
        rows.append((t, n))
    meta.update(theta_min=t_min, theta_max=t_max, points=args.points, tol=args.tol, clamp=int(args.clamp))
    return Table("curve", meta, ("theta", "n"), rows)


def cmd_entropy_curve(args):
    stat, method, z = args.stat, args.method, args.z
    if method not in ("exact", "stirling"):
        raise UsageError(f"entropy-curve does not support --method {method}")
    if z < 1:
        raise UsageError("--z must be >= 1")
    if stat == "fermi":
        default = (0.0, 1.0) if method == "exact" else (PARAMETRIC_EPS, 1.0 - PARAMETRIC_EPS)
        entropy = fermi.fd_entropy_exact if method == "exact" else fermi.fd_entropy_stirling
    else:
        default = (0.0, BOSE_N_CAP) if method == "exact" else (PARAMETRIC_EPS, BOSE_N_CAP)
        entropy = bose.be_entropy_exact if method == "exact" else bose.be_entropy_stirling
    n_min = args.n_min if args.n_min is not None else default[0]
    n_max = args.n_max if args.n_max is not None else default[1]
    if not n_min <= n_max:
        raise UsageError("--n-min must not exceed --n-max")
    rows = [(n, entropy(float(n), z)) for n in _grid(n_min, n_max, args.points)]
    meta = {"stat": stat, "z": z, "method": method, "n_min": n_min, "n_max": n_max, "points": args.points}
    return Table("entropy-curve", meta, ("n", "S"), rows)


def cmd_sweep(args):
    stat, spectrum = read_spectrum(args.spectrum)
    if args.method not in ensemble.METHODS:
        raise UsageError(f"sweep does not support --method {args.method}")
    if args.N is None:
        raise UsageError("sweep needs --N")
    if args.T_min is None or args.T_max is None:
        raise UsageError("sweep needs --T-min and --T-max")
    if not 0.0 < args.T_min <= args.T_max:
        raise UsageError("need 0 < --T-min <= --T-max")
    J = len(spectrum)
    columns = ["T", "mu", "N_check", "E", "S", "Omega"] + [f"n_{j}" for j in range(1, J + 1)] + ["flag"]
    rows = []
    for T in _grid(args.T_min, args.T_max, args.points):
        T = float(T)
        sol = ensemble.solve_mu(spectrum, T, args.N, stat, args.method, args.tol)
        obs = ensemble.observables(spectrum, T, sol.mu, stat, args.method, args.tol)
        ns = ensemble.occupations(spectrum, T, sol.mu, stat, args.method, args.tol)
        flag = "plateau" if sol.plateau is not None else ""
        rows.append([T, sol.mu, obs.N, obs.E, obs.S, obs.Omega, *ns, flag])
    meta = {
        "stat": stat,
        "spectrum": args.spectrum,
        "levels": J,
        "N": args.N,
        "method": args.method,
        "T_min": args.T_min,
        "T_max": args.T_max,
        "points": args.points,
        "tol": args.tol,
    }
    return Table("sweep", meta, columns, rows)


def cmd_condense(args):
    stat, spectrum = read_spectrum(args.spectrum)
    if stat != "bose":
        raise UsageError("condense needs a bose spectrum")
    if args.N is None:
        raise UsageError("condense needs --N")
    if len(spectrum) < 2:
        raise UsageError("condense needs at least two levels")
    notes = []
    rows = []
    try:
        T1 = ensemble.bose_T1(spectrum, args.N)
    except NoSolutionError as exc:
        T1 = None
        notes.append(f"no T1: {exc}")
    rows.append(("T1", "none" if T1 is None else T1))
    try:
        res = ensemble.bose_TB(spectrum, args.N, args.tol)
    except NoSolutionError as exc:
        notes.append(f"no finite T_B: {exc}")
        rows.append(("T_B", "none"))
        rows.append(("mu_B", "none"))
    else:
        rows.append(("T_B", res.T_B))
        rows.append(("mu_B", res.mu_B))
        rows += [(f"n_{j}", n) for j, n in enumerate(res.occupations, start=1)]
        rows.append(("active_levels", " ".join(str(j + 1) for j in res.active_levels)))
    meta = {"stat": stat, "spectrum": args.spectrum, "levels": len(spectrum), "N": args.N, "tol": args.tol}
    return Table("condense", meta, ("quantity", "value"), rows, notes)


def cmd_check_specfun(args):
    checks = identity_battery()
    rows = [(c.name, c.residual, c.tolerance, "pass" if c.passed else "FAIL") for c in checks]
    table = Table("check-specfun", {"identities": len(checks)}, ("identity", "residual", "tolerance", "status"), rows)
    table.exit_code = EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK_FAILED
    return table


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qdist",
        description="Exact quantum distribution functions for small particle numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=1e-12, help="solver tolerance (default 1e-12)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("curve", help="occupation n(theta) for one level")
    p.add_argument("--stat", choices=ensemble.STATISTICS, required=True)
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--method", default="exact")
    p.add_argument("--theta-min", type=float)
    p.add_argument("--theta-max", type=float)
    p.add_argument("--points", type=int, default=61)
    p.add_argument("--clamp", action="store_true", help="clip corrected occupations into the physical range")
    common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("entropy-curve", help="level entropy S(n)")
    p.add_argument("--stat", choices=ensemble.STATISTICS, required=True)
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--method", default="exact")
    p.add_argument("--n-min", type=float)
    p.add_argument("--n-max", type=float)
    p.add_argument("--points", type=int, default=21)
    common(p)
    p.set_defaults(func=cmd_entropy_curve)

    p = sub.add_parser("sweep", help="thermodynamics at fixed N over a temperature grid")
    p.add_argument("--spectrum", required=True)
    p.add_argument("--N", type=float)
    p.add_argument("--T-min", dest="T_min", type=float)
    p.add_argument("--T-max", dest="T_max", type=float)
    p.add_argument("--points", type=int, default=11)
    p.add_argument("--method", default="exact")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("condense", help="boson onset temperature T1 and condensation analogue T_B")
    p.add_argument("--spectrum", required=True)
    p.add_argument("--N", type=float)
    common(p)
    p.set_defaults(func=cmd_condense)

    p = sub.add_parser("check-specfun", help="run the special-function identity battery")
    common(p)
    p.set_defaults(func=cmd_check_specfun)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        table = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qdist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qdist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"qdist: did not converge: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (DomainError, InfeasibleError, NoSolutionError) as exc:
        print(f"qdist: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(table.render(args.format))
    return getattr(table, "exit_code", EXIT_OK)


if __name__ == "__main__":
    sys.exit(main())
