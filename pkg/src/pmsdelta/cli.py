"""Command-line front end: period tables, convergence studies, precession.

Output contract: CSV with a header row and LF line endings, floats printed
with 17 significant digits so identical invocations are byte-identical and
diff-stable.  JSON output mirrors the same fields with stable key order.
Informational lines (fitted slopes, reference values) go to stdout when the
table is written to a file, and to stderr when the table itself occupies
stdout, so piped CSV stays clean.

Exit codes: 0 on success, 2 when a precondition on the inputs is violated
(one-line diagnostic on stderr), 3 when the requested orbit lies at or below
the critical semimajor axis.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence, TextIO

from .analysis import (
    ConvergenceStudy,
    duffing_b0_study,
    duffing_error_vs_rho,
    negative_rho_study,
    precession_error_table,
    sextic_c0_study,
)
from .constants import DEFAULT_ECCENTRICITY, DEFAULT_GM, REFERENCE
from .errors import (
    BeyondCritical,
    DomainError,
    PmsDeltaError,
    ThirdRootInsideInterval,
)
from .oscillators import (
    cubic_exact_period,
    cubic_series,
    duffing_exact_period,
    duffing_period_series,
    even_power_exact_period,
    even_power_kappa_balanced,
    even_power_kappa_pms,
    even_power_series,
    pendulum_approx,
    pendulum_exact,
    sextic_exact_period,
    sextic_series,
)
from .precession import OrbitParams, critical_semimajor_axis, precession_exact, precession_series

RAD_TO_ARCSEC = 180.0 * 3600.0 / math.pi


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _geometric_grid(lo: float, hi: float, points: int) -> list[float]:
    if points < 2:
        raise DomainError("points must be >= 2")
    if not lo < hi:
        raise DomainError("grid minimum must be below grid maximum")
    if lo <= 0.0:
        step = (hi - lo) / (points - 1)
        return [lo + i * step for i in range(points)]
    ratio = hi / lo
    return [lo * ratio ** (i / (points - 1)) for i in range(points)]


def _emit(table: str, out_path: str | None) -> TextIO:
    """Write the table; return the stream informational lines should use."""
    if out_path is None or out_path == "-":
        sys.stdout.write(table)
        return sys.stderr
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        handle.write(table)
    return sys.stdout


def _study_payload(study: ConvergenceStudy) -> dict:
    return json.loads(study.to_json())


# ---------------------------------------------------------------- period --


def _period_rows(args: argparse.Namespace) -> tuple[list[float], float]:
    orders = range(args.order + 1)
    if args.model == "duffing":
        return [duffing_period_series(args.rho, n) for n in orders], duffing_exact_period(args.rho)
    if args.model == "sextic":
        return [sextic_series(args.rho, n) for n in orders], sextic_exact_period(args.rho)
    if args.model == "even-power":
        K = args.exponent
        if args.kappa == "pms":
            kappa = even_power_kappa_pms(K)
        elif args.kappa == "balanced":
            kappa = even_power_kappa_balanced(K)
        else:
            kappa = float(args.kappa)
        values = [even_power_series(K, args.rho, kappa, n) for n in orders]
        return values, even_power_exact_period(K, args.rho)
    if args.model == "cubic":
        values = [cubic_series(args.x_minus, args.x_plus, n) for n in orders]
        return values, cubic_exact_period(args.x_minus, args.x_plus)
    if args.model == "pendulum":
        values = [pendulum_approx(args.amplitude, args.taylor, n) for n in orders]
        return values, pendulum_exact(args.amplitude)
    raise DomainError(f"unknown model {args.model!r}")


def cmd_period(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise DomainError("order must be >= 0")
    values, exact = _period_rows(args)
    if args.format == "json":
        payload = {
            "model": args.model,
            "rows": [
                {"order": n, "period": v} for n, v in enumerate(values)
            ],
        }
        if args.exact:
            payload["exact"] = exact
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    header = "order,period,exact" if args.exact else "order,period"
    lines = [header]
    for n, v in enumerate(values):
        row = f"{n},{_fmt(v)}"
        if args.exact:
            row += f",{_fmt(exact)}"
        lines.append(row)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


# ----------------------------------------------------------- convergence --


def _info_fit(stream: TextIO, study: ConvergenceStudy) -> None:
    if study.fit is None:
        return
    stream.write(
        f"fit[{study.label}]: alpha={_fmt(study.fit.alpha)}"
        f" beta={_fmt(study.fit.beta)} residual={_fmt(study.fit.residual)}\n"
    )


def _merged_parity_csv(even: ConvergenceStudy, odd: ConvergenceStudy) -> str:
    rows = [(p.n, p, "even") for p in even.points] + [(p.n, p, "odd") for p in odd.points]
    rows.sort(key=lambda item: item[0])
    lines = ["n,value,reference,rel_error,parity"]
    for _, p, parity in rows:
        lines.append(
            f"{_fmt(p.n)},{_fmt(p.value)},{_fmt(p.reference)},{_fmt(p.rel_error)},{parity}"
        )
    return "\n".join(lines) + "\n"


def _wide_precession_csv(studies: list[ConvergenceStudy], orders: list[int]) -> str:
    header = "a," + ",".join(f"order{n}" for n in orders)
    lines = [header]
    for i, point in enumerate(studies[0].points):
        cells = [_fmt(point.n)]
        cells.extend(_fmt(s.points[i].rel_error) for s in studies)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def cmd_convergence(args: argparse.Namespace) -> int:
    if args.study == "duffing-b0":
        study = duffing_b0_study(args.max_order)
        table = study.to_json() if args.format == "json" else study.to_csv()
        stream = _emit(table, args.out)
        _info_fit(stream, study)
        stream.write(
            f"reference slopes: ln9={_fmt(float(REFERENCE.beta_quartic))}"
            f" published={_fmt(float(REFERENCE.beta_quartic_pks))}\n"
        )
        return 0
    if args.study == "sextic-c0":
        study = sextic_c0_study(args.max_order)
        table = study.to_json() if args.format == "json" else study.to_csv()
        stream = _emit(table, args.out)
        _info_fit(stream, study)
        stream.write(
            f"reference slope: ln(5/3)={_fmt(float(REFERENCE.beta_sextic))}\n"
        )
        return 0
    if args.study == "duffing-rho":
        grid = _geometric_grid(args.rho_min, args.rho_max, args.points)
        study = duffing_error_vs_rho(grid, order=args.fixed_order)
        table = study.to_json() if args.format == "json" else study.to_csv()
        _emit(table, args.out)
        return 0
    if args.study == "negative-rho":
        even, odd = negative_rho_study(args.exponent, rho=args.rho, max_order=args.max_order)
        if args.format == "json":
            payload = {"even": _study_payload(even), "odd": _study_payload(odd)}
            table = json.dumps(payload, indent=2) + "\n"
        else:
            table = _merged_parity_csv(even, odd)
        stream = _emit(table, args.out)
        _info_fit(stream, even)
        _info_fit(stream, odd)
        return 0
    if args.study == "precession":
        orders = [int(tok) for tok in args.orders.split(",") if tok.strip() != ""]
        if not orders:
            raise DomainError("orders must name at least one expansion order")
        grid = _geometric_grid(args.a_min, args.a_max, args.points)
        studies = precession_error_table(
            grid, orders, GM=args.GM, eccentricity=args.eccentricity
        )
        if args.format == "json":
            table = json.dumps([_study_payload(s) for s in studies], indent=2) + "\n"
        else:
            table = _wide_precession_csv(studies, orders)
        _emit(table, args.out)
        return 0
    raise DomainError(f"unknown study {args.study!r}")


# ------------------------------------------------------------ precession --


def cmd_precession(args: argparse.Namespace) -> int:
    GM = args.GM if args.GM is not None else args.mass * args.g_over_c2
    scale = 1.0 if args.units == "rad" else RAD_TO_ARCSEC
    a_c = critical_semimajor_axis(GM, args.eccentricity)
    if args.a <= a_c and not args.series_only:
        sys.stderr.write(f"below critical semimajor axis a_c={_fmt(a_c)}\n")
        return 3
    orbit = OrbitParams(GM=GM, a=args.a, epsilon=args.eccentricity)
    lines = [f"series={_fmt(scale * precession_series(orbit, args.order))}"]
    if not args.series_only:
        lines.append(f"exact={_fmt(scale * precession_exact(orbit))}")
    lines.append(f"a_c={_fmt(a_c)}")
    lines.append(f"units={args.units}")
    if args.series_only and args.a <= a_c:
        lines.append("note=series extrapolated below the critical semimajor axis")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


# --------------------------------------------------------------- parsing --


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmsdelta",
        description="Periods and precession from an optimized expansion of "
        "turning-point integrals, with convergence studies against an "
        "independent quadrature oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    period = sub.add_parser("period", help="period table at orders 0..N")
    period.add_argument("model", choices=["duffing", "sextic", "even-power", "cubic", "pendulum"])
    period.add_argument("--order", type=int, default=4, help="highest expansion order")
    period.add_argument("--exact", action="store_true", help="append the oracle value as a column")
    period.add_argument("--rho", type=float, default=1.0, help="anharmonicity (accepts inf)")
    period.add_argument("--exponent", type=int, default=2, help="half-power K for even-power")
    period.add_argument(
        "--kappa",
        default="pms",
        help="even-power frequency rule: pms, balanced, or a number",
    )
    period.add_argument("--x-minus", type=float, default=-1.0, help="left turning point (cubic)")
    period.add_argument("--x-plus", type=float, default=1.0, help="right turning point (cubic)")
    period.add_argument("--amplitude", type=float, default=1.0, help="pendulum amplitude (rad)")
    period.add_argument("--taylor", type=int, default=4, choices=[2, 4, 6],
                        help="pendulum potential truncation")
    period.add_argument("--format", choices=["csv", "json"], default="csv")
    period.add_argument("--out", default=None, help="output path (default stdout)")
    period.set_defaults(func=cmd_period)

    conv = sub.add_parser("convergence", help="error-decay studies and sweeps")
    conv.add_argument(
        "study",
        choices=["duffing-b0", "duffing-rho", "sextic-c0", "negative-rho", "precession"],
    )
    conv.add_argument("--max-order", type=int, default=10)
    conv.add_argument("--rho", type=float, default=-0.9, help="anharmonicity (negative-rho)")
    conv.add_argument("--exponent", type=int, default=5, help="half-power K (negative-rho)")
    conv.add_argument("--rho-min", type=float, default=0.1)
    conv.add_argument("--rho-max", type=float, default=1e4)
    conv.add_argument("--fixed-order", type=int, default=2,
                      help="series order for the duffing-rho sweep")
    conv.add_argument("--a-min", type=float, default=150.0)
    conv.add_argument("--a-max", type=float, default=1000.0)
    conv.add_argument("--points", type=int, default=16, help="grid size for sweeps")
    conv.add_argument("--orders", default="0,2,4,6",
                      help="comma-separated orders for the precession table")
    conv.add_argument("--GM", type=float, default=DEFAULT_GM, help="GM/c^2 in metres")
    conv.add_argument("--eccentricity", type=float, default=DEFAULT_ECCENTRICITY)
    conv.add_argument("--format", choices=["csv", "json"], default="csv")
    conv.add_argument("--out", default=None, help="output path (default stdout)")
    conv.set_defaults(func=cmd_convergence)

    prec = sub.add_parser("precession", help="perihelion advance for one orbit")
    prec.add_argument("--a", type=float, required=True, help="semimajor axis (metres)")
    prec.add_argument("--eccentricity", type=float, default=DEFAULT_ECCENTRICITY)
    prec.add_argument("--GM", type=float, default=None,
                      help="GM/c^2 in metres (overrides --mass/--g-over-c2)")
    prec.add_argument("--mass", type=float, default=1.97e30, help="central mass (kg)")
    prec.add_argument("--g-over-c2", type=float, default=7.425e-30,
                      help="G/c^2 in metres per kilogram")
    prec.add_argument("--order", type=int, default=6)
    prec.add_argument("--units", choices=["arcsec", "rad"], default="arcsec")
    prec.add_argument("--series-only", action="store_true",
                      help="skip the oracle value; marks sub-critical output as extrapolation")
    prec.set_defaults(func=cmd_precession)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ThirdRootInsideInterval, BeyondCritical) as exc:
        sys.stderr.write(f"{exc}\n")
        return 3
    except PmsDeltaError as exc:
        sys.stderr.write(f"{exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"{exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
