"""Command-line interface: classify, simulate, sweep, calibrate.

All numeric output uses 12 significant digits with no locale influence,
and nothing that varies between runs (timestamps, paths, ordering) is
ever emitted, so identical inputs produce byte-identical outputs.

Exit codes: 0 success, 1 runtime or numeric failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .calibration import fit_growth_rate, read_income_series, scenario_from_data
from .core import (
    closed_form_B,
    closed_form_B_star,
    exponent_g,
    exponent_g_star,
    ratio_analysis,
)
from .dynamics import integrate, time_grid
from .errors import DomainError, IntegrationError, QuadratureError
from .regime import DEFAULT_EPSILON, classify
from .scenario import PARAM_KEYS, load_scenario, parse_sweep, with_param


def _fmt(value: float) -> str:
    return format(float(value), ".12g")


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def _check_tolerance(value: float) -> float:
    if not 0.0 < value < 1.0:
        raise DomainError(f"--tolerance must be in (0, 1), got {value}")
    return value


def cmd_classify(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    epsilon = _check_tolerance(args.tolerance)
    params = scenario.params
    report = classify(params, epsilon=epsilon)
    analysis = ratio_analysis(params)
    if report.interval_j is None:
        interval = "none"
    else:
        interval = f"]{_fmt(report.interval_j[0])}, {_fmt(report.interval_j[1])}["
    lines = [
        ("n", _fmt(params.n)),
        ("growth_case", report.growth_case.value),
        ("boundary_g", _fmt(report.boundary_g)),
        ("boundary_g_star", _fmt(report.boundary_g_star)),
        ("band", report.band.value),
        ("behavior_g", report.behavior_g.value),
        ("behavior_g_star", report.behavior_g_star.value),
        ("exponent_g", _fmt(exponent_g(params))),
        ("exponent_g_star", _fmt(exponent_g_star(params))),
        ("g_rate", _fmt(analysis.g_rate)),
        ("f_value", _fmt(analysis.f_value)),
        ("n_hat", _fmt(report.n_hat)),
        ("dominance", report.dominance.value),
        ("interval_J", interval),
        ("roles_reversed", _fmt_bool(report.roles_reversed)),
    ]
    if report.crossover_time is not None:
        lines.append(("crossover_time", _fmt(report.crossover_time)))
    for key, value in lines:
        print(f"{key}: {value}")
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    params = scenario.params
    t_end = args.t_end
    if t_end < params.t0:
        raise DomainError(f"--t-end must be >= t0 = {params.t0}, got {t_end}")
    step = scenario.numerics.step
    p, q = scenario.income_pair()

    if args.mode in ("closed", "both"):
        closed_params = scenario.closed_form_params()
        grid = time_grid(params.t0, t_end, step)
        closed_rows = [
            (t, closed_form_B(closed_params, t), closed_form_B_star(closed_params, t))
            for t in grid
        ]
    if args.mode in ("ode", "both"):
        trajectory = integrate(p, q, params, t_end, method="rk4", step=step)

    out_lines: list[str] = []
    deviation = None
    if args.mode == "closed":
        out_lines.append("t,B,B_star,p,q")
        for t, B, S in closed_rows:
            out_lines.append(
                f"{_fmt(t)},{_fmt(B)},{_fmt(S)},{_fmt(p.value(t))},{_fmt(q.value(t))}"
            )
    elif args.mode == "ode":
        out_lines.append("t,B,B_star,p,q")
        for t, B, S, pv, qv in zip(
            trajectory.times, trajectory.B, trajectory.B_star, trajectory.p, trajectory.q
        ):
            out_lines.append(f"{_fmt(t)},{_fmt(B)},{_fmt(S)},{_fmt(pv)},{_fmt(qv)}")
    else:
        out_lines.append("t,B,B_star,p,q,B_ode,B_star_ode")
        deviation = 0.0
        for (t, B, S), B_ode, S_ode, pv, qv in zip(
            closed_rows, trajectory.B, trajectory.B_star, trajectory.p, trajectory.q
        ):
            deviation = max(deviation, abs(B_ode - B) / B, abs(S_ode - S) / S)
            out_lines.append(
                f"{_fmt(t)},{_fmt(B)},{_fmt(S)},{_fmt(pv)},{_fmt(qv)},"
                f"{_fmt(B_ode)},{_fmt(S_ode)}"
            )
    _write_table(args.out, out_lines)
    if deviation is not None:
        print(f"max_relative_deviation: {_fmt(deviation)}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    epsilon = _check_tolerance(args.tolerance)
    spec = parse_sweep(args.vary)
    rows = ["value,exponent_g,exponent_g_star,f_value,band,behavior_g,behavior_g_star,growth_case"]
    skipped: list[tuple[float, str]] = []
    for value in spec.grid():
        try:
            params = with_param(scenario.params, spec.name, value)
        except DomainError as exc:
            print(f"warning: skipped {spec.name}={_fmt(value)}: {exc}", file=sys.stderr)
            skipped.append((value, str(exc)))
            continue
        report = classify(params, epsilon=epsilon)
        analysis = ratio_analysis(params)
        rows.append(
            f"{_fmt(value)},{_fmt(exponent_g(params))},{_fmt(exponent_g_star(params))},"
            f"{_fmt(analysis.f_value)},{report.band.value},{report.behavior_g.value},"
            f"{report.behavior_g_star.value},{report.growth_case.value}"
        )
    for value, reason in skipped:
        rows.append(f"# skipped {spec.name}={_fmt(value)}: {reason}")
    _write_table(args.out, rows)
    return 0


def cmd_calibrate(args: argparse.Namespace) -> int:
    series = read_income_series(args.series)
    fit = fit_growth_rate(series)
    print(f"lambda: {_fmt(fit.lam)}")
    print(f"p0: {_fmt(fit.p0)}")
    print(f"residual: {_fmt(fit.residual)}")
    print(f"points: {len(series.points)}")
    if args.write_scenario is not None:
        if args.n is None:
            raise DomainError("--n is required when --write-scenario is given")
        params = scenario_from_data(
            series, args.n, a=args.a, a_star=args.a_star, b=args.b, b_star=args.b_star
        )
        doc = {key: getattr(params, field) for key, field in PARAM_KEYS.items()}
        Path(args.write_scenario).write_text(
            json.dumps(doc, indent=2) + "\n", encoding="utf-8"
        )
        print(f"scenario_written: {args.write_scenario}")
    return 0


def _write_table(path: str, lines: list[str]) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise DomainError(f"cannot write output file {path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wbdyn",
        description="Two-group well-being dynamics: classify regimes, simulate "
        "trajectories, sweep parameters, and calibrate growth rates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classify_p = sub.add_parser("classify", help="classify a scenario's long-run regime")
    classify_p.add_argument("--scenario", required=True, metavar="PATH")
    classify_p.add_argument(
        "--tolerance",
        type=float,
        default=DEFAULT_EPSILON,
        metavar="REAL",
        help="relative tolerance for boundary comparisons (default %(default)g)",
    )
    classify_p.set_defaults(func=cmd_classify)

    simulate_p = sub.add_parser("simulate", help="write a trajectory table")
    simulate_p.add_argument("--scenario", required=True, metavar="PATH")
    simulate_p.add_argument("--t-end", type=float, required=True, metavar="REAL")
    simulate_p.add_argument("--mode", choices=("closed", "ode", "both"), default="closed")
    simulate_p.add_argument("--out", required=True, metavar="PATH")
    simulate_p.set_defaults(func=cmd_simulate)

    sweep_p = sub.add_parser("sweep", help="classify across one parameter grid")
    sweep_p.add_argument("--scenario", required=True, metavar="PATH")
    sweep_p.add_argument("--vary", required=True, metavar="NAME=START:STOP:STEP")
    sweep_p.add_argument("--out", required=True, metavar="PATH")
    sweep_p.add_argument(
        "--tolerance", type=float, default=DEFAULT_EPSILON, metavar="REAL",
        help="relative tolerance for boundary comparisons (default %(default)g)",
    )
    sweep_p.set_defaults(func=cmd_sweep)

    calibrate_p = sub.add_parser("calibrate", help="fit a growth rate from a series file")
    calibrate_p.add_argument("--series", required=True, metavar="PATH")
    calibrate_p.add_argument(
        "--write-scenario", metavar="PATH", help="also assemble and write a scenario file"
    )
    calibrate_p.add_argument("--n", type=float, metavar="REAL", help="income multiple for the assembled scenario")
    calibrate_p.add_argument("--a", type=float, default=1.0, metavar="REAL")
    calibrate_p.add_argument("--a-star", type=float, default=1.0, metavar="REAL")
    calibrate_p.add_argument("--b", type=float, default=0.05, metavar="REAL")
    calibrate_p.add_argument("--b-star", type=float, default=0.05, metavar="REAL")
    calibrate_p.set_defaults(func=cmd_calibrate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrationError as exc:
        detail = "" if exc.last_time is None else f" (last good t = {_fmt(exc.last_time)})"
        print(f"error: {exc}{detail}", file=sys.stderr)
        return 1
    except (QuadratureError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
