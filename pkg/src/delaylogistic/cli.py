"""Command-line front end: stability queries, sweeps, simulations.

Every input is a flag (no config files, no environment), so a run is fully
reproducible from its argv. Exit codes: 0 success, 1 usage error, 2
numeric failure (non-convergence, bracketing failure, degenerate input).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import delay_map, discretization, jury, polynomial, sweep

_TABLES_TAU_MAX = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad usage instead of exiting the process."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return value


def _float_list(text: str) -> list[float]:
    try:
        return [_finite_float(part) for part in text.split(",") if part.strip() != ""]
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(f"not a comma-separated number list: {text!r}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="delaylogistic",
                     description="Stability toolkit for the delayed logistic map.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sim = sub.add_parser("simulate", help="run the delayed map and emit the trajectory")
    sim.add_argument("--r", type=_finite_float, required=True, help="reproduction rate")
    sim.add_argument("--K", type=_finite_float, required=True, help="carrying capacity")
    sim.add_argument("--tau", type=_nonneg_int, required=True, help="delay in steps")
    seed = sim.add_mutually_exclusive_group(required=True)
    seed.add_argument("--x0", type=_finite_float,
                      help="constant fill for the tau+1 seeded history entries")
    seed.add_argument("--history", type=_float_list, metavar="V0,V1,...",
                      help="explicit tau+1 seeded history entries, oldest first")
    sim.add_argument("--steps", type=_nonneg_int, required=True)
    sim.add_argument("--format", choices=("csv", "json"), default="csv")
    sim.add_argument("--out", metavar="PATH", default=None)

    stab = sub.add_parser("stability", help="verdict for one fixed point and rate")
    stab.add_argument("--tau", type=_nonneg_int, required=True)
    stab.add_argument("--r", type=_finite_float, required=True)
    stab.add_argument("--point", choices=(delay_map.TRIVIAL, delay_map.NONTRIVIAL),
                      required=True)
    stab.add_argument("--method", choices=(sweep.JURY, sweep.ORACLE),
                      default=sweep.JURY)
    stab.add_argument("--out", metavar="PATH", default=None)

    bnd = sub.add_parser("boundary", help="stability thresholds for tau = 0..max")
    bnd.add_argument("--tau-max", type=_nonneg_int, required=True)
    bnd.add_argument("--tol", type=_finite_float, default=sweep.DEFAULT_TOL)
    bnd.add_argument("--format", choices=("csv", "json"), default="json")
    bnd.add_argument("--out", metavar="PATH", default=None)

    tab = sub.add_parser("tables", help="both fixed-point stability tables, tau = 0..5")
    tab.add_argument("--format", choices=("csv", "json"), default="csv")
    tab.add_argument("--out", metavar="PATH", default=None)

    jry = sub.add_parser("jury", help="reduction table, conditions and verdict")
    jry.add_argument("--coeffs", type=_float_list, required=True, metavar="C0,C1,...",
                     help="polynomial coefficients, highest power first")
    jry.add_argument("--out", metavar="PATH", default=None)

    dis = sub.add_parser("discretize", help="fixed-point verdicts for a one-step scheme")
    dis.add_argument("--scheme", choices=(discretization.FORWARD, discretization.RATIO),
                     required=True)
    dis.add_argument("--r", type=_finite_float, required=True)
    dis.add_argument("--h", type=_finite_float, required=True)
    dis.add_argument("--K", type=_finite_float, required=True)
    dis.add_argument("--out", metavar="PATH", default=None)
    return parser


def _verdict_payload(verdict: jury.StabilityVerdict) -> dict:
    return {"status": verdict.status, "witness": verdict.witness,
            "method": verdict.method}


def _condition_payload(cond: jury.ConditionResult) -> dict:
    return {"index": cond.index, "description": cond.description,
            "lhs": cond.lhs, "rhs": cond.rhs,
            "satisfied": cond.satisfied, "margin": cond.margin,
            "tolerance": cond.tolerance}


def _cmd_simulate(args: argparse.Namespace) -> str:
    params = delay_map.DelayParams(r=args.r, K=args.K, tau=args.tau)
    if args.history is not None:
        if len(args.history) != args.tau + 1:
            raise UsageError(
                f"--history needs exactly tau + 1 = {args.tau + 1} values, "
                f"got {len(args.history)}")
        init = args.history
    else:
        init = [args.x0] * (args.tau + 1)
    trajectory = delay_map.simulate(params, init, args.steps)
    if args.format == "csv":
        lines = ["step,x"]
        lines += [f"{n},{x:.17g}" for n, x in trajectory.samples]
        return "\n".join(lines) + "\n"
    return json.dumps({
        "r": params.r, "K": params.K, "tau": params.tau,
        "diverged": trajectory.diverged,
        "samples": [{"step": n, "x": x} for n, x in trajectory.samples],
    }, indent=2) + "\n"


def _cmd_stability(args: argparse.Namespace) -> str:
    p = delay_map.char_poly(delay_map.DelayParams(r=args.r, K=1.0, tau=args.tau),
                            args.point)
    if args.point == delay_map.NONTRIVIAL:
        verdict = sweep.is_stable_nontrivial(args.tau, args.r, method=args.method)
    elif args.method == sweep.JURY:
        verdict = jury.jury_verdict(p)
    else:
        verdict = jury.oracle_verdict(p)

    payload: dict = {
        "tau": args.tau, "r": args.r, "point": args.point,
        "requested_method": args.method,
        "char_poly": list(p.coeffs),
        "verdict": _verdict_payload(verdict),
    }
    if verdict.method == sweep.JURY:
        payload["conditions"] = [_condition_payload(c)
                                 for c in jury.jury_conditions(p)]
    else:
        moduli = sorted((abs(z) for z in polynomial.roots(p).roots), reverse=True)
        payload["root_moduli"] = moduli
    return json.dumps(payload, indent=2) + "\n"


def _cmd_boundary(args: argparse.Namespace) -> str:
    table = sweep.boundary_table(args.tau_max, tol=args.tol)
    points = [{"tau": p.tau, "r_critical": p.r_critical,
               "bracket_width": p.bracket_width, "method": p.method}
              for p in table.points]
    if args.format == "csv":
        lines = ["tau,r_critical,bracket_width,method"]
        lines += [f"{p.tau},{p.r_critical:.17g},{p.bracket_width:.17g},{p.method}"
                  for p in table.points]
        lines.append(f"# monotone_decreasing={str(table.monotone_decreasing).lower()}")
        return "\n".join(lines) + "\n"
    return json.dumps({"points": points,
                       "monotone_decreasing": table.monotone_decreasing},
                      indent=2) + "\n"


def _cmd_tables(args: argparse.Namespace) -> str:
    taus = range(_TABLES_TAU_MAX + 1)
    trivial = [delay_map.trivial_stability_range(tau) for tau in taus]
    boundary = sweep.boundary_table(_TABLES_TAU_MAX)
    if args.format == "csv":
        lines = ["trivial fixed point: stable r range", "tau,r_min,r_max"]
        lines += [f"{tau},{lo:.6f},{hi:.6f}" for tau, (lo, hi) in zip(taus, trivial)]
        lines.append("")
        lines.append("nontrivial fixed point: stable for 0 < r < r_critical")
        lines.append("tau,r_critical")
        lines += [f"{p.tau},{p.r_critical:.6f}" for p in boundary.points]
        return "\n".join(lines) + "\n"
    return json.dumps({
        "trivial": [{"tau": tau, "r_min": round(lo, 6), "r_max": round(hi, 6)}
                    for tau, (lo, hi) in zip(taus, trivial)],
        "nontrivial": [{"tau": p.tau, "r_critical": round(p.r_critical, 6)}
                       for p in boundary.points],
    }, indent=2) + "\n"


def _cmd_jury(args: argparse.Namespace) -> str:
    if not args.coeffs:
        raise UsageError("--coeffs needs at least one value")
    p = polynomial.Polynomial(tuple(args.coeffs))
    normalized = polynomial.normalize_leading(p)
    verdict = jury.jury_verdict(normalized)
    payload: dict = {
        "coeffs": list(p.coeffs),
        "normalized_coeffs": list(normalized.coeffs),
        "verdict": _verdict_payload(verdict),
    }
    try:
        payload["table_rows"] = [list(row)
                                 for row in jury.jury_table(normalized).rows]
    except jury.TableNotApplicableError:
        payload["table_rows"] = []
    except jury.SingularTableError as exc:
        payload["table_rows"] = None
        payload["note"] = f"{exc}; verdict taken from the root oracle"
    if verdict.method == sweep.JURY:
        payload["conditions"] = [_condition_payload(c)
                                 for c in jury.jury_conditions(normalized)]
    else:
        moduli = sorted((abs(z) for z in polynomial.roots(normalized).roots),
                        reverse=True)
        payload["root_moduli"] = moduli
    return json.dumps(payload, indent=2) + "\n"


def _cmd_discretize(args: argparse.Namespace) -> str:
    params = discretization.SchemeParams(r=args.r, K=args.K, h=args.h,
                                         scheme=args.scheme)
    at_zero, at_capacity = discretization.scheme_stability(params)
    return json.dumps({
        "scheme": params.scheme, "r": params.r, "h": params.h, "K": params.K,
        "fixed_points": [
            {"x": 0.0, "derivative": at_zero.witness,
             "verdict": _verdict_payload(at_zero)},
            {"x": params.K, "derivative": at_capacity.witness,
             "verdict": _verdict_payload(at_capacity)},
        ],
    }, indent=2) + "\n"


_COMMANDS = {
    "simulate": _cmd_simulate,
    "stability": _cmd_stability,
    "boundary": _cmd_boundary,
    "tables": _cmd_tables,
    "jury": _cmd_jury,
    "discretize": _cmd_discretize,
}

_NUMERIC_ERRORS = (
    polynomial.DegeneratePolynomialError,
    polynomial.RootConvergenceError,
    sweep.BracketingError,
    discretization.PoleError,
    ValueError,
)


def run(argv: list[str]) -> int:
    """Dispatch one invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        output = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except _NUMERIC_ERRORS as exc:
        print(f"delaylogistic: error: {exc}", file=sys.stderr)
        return 2
    if args.out is not None:
        Path(args.out).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
