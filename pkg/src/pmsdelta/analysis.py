"""Convergence studies: error decay rates and comparison tables.

Each study evaluates a family of partial sums against a reference computed
independently through the quadrature oracle (never against a stored journal
number, so the data is self-validating), and ships the result as a
ConvergenceStudy: labelled points plus an optional log-linear fit of the
error decay.  Studies serialize to CSV and JSON for plotting.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .constants import DEFAULT_ECCENTRICITY, DEFAULT_GM
from .errors import DomainError, PmsDeltaError
from .oracle import FitResult, fit_log_linear
from .oscillators import (
    duffing_b0,
    duffing_exact_period,
    duffing_period_series,
    even_power_exact_period,
    even_power_kappa_pms,
    even_power_series,
)
from .precession import OrbitParams, precession_exact, precession_series

__all__ = [
    "StudyPoint",
    "ConvergenceStudy",
    "duffing_b0_study",
    "duffing_error_vs_rho",
    "sextic_c0_study",
    "negative_rho_study",
    "precession_error_table",
]


def _fmt(x: float) -> str:
    return format(x, ".17g")


@dataclass(frozen=True)
class StudyPoint:
    """One abscissa of a study: n is an order for decay studies, a parameter
    value for parameter sweeps."""

    n: float
    value: float
    reference: float
    rel_error: float


@dataclass(frozen=True)
class ConvergenceStudy:
    label: str
    points: tuple[StudyPoint, ...]
    fit: FitResult | None = None

    def to_csv(self) -> str:
        """CSV with header, LF line endings, 17 significant digits."""
        lines = ["n,value,reference,rel_error"]
        for p in self.points:
            lines.append(
                f"{_fmt(p.n)},{_fmt(p.value)},{_fmt(p.reference)},{_fmt(p.rel_error)}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """JSON mirror of the fields, stable key order."""
        payload = {
            "label": self.label,
            "points": [
                {
                    "n": p.n,
                    "value": p.value,
                    "reference": p.reference,
                    "rel_error": p.rel_error,
                }
                for p in self.points
            ],
            "fit": (
                None
                if self.fit is None
                else {
                    "alpha": self.fit.alpha,
                    "beta": self.fit.beta,
                    "residual": self.fit.residual,
                }
            ),
        }
        return json.dumps(payload, indent=2) + "\n"


def _points_and_fit(
    orders: Sequence[int],
    values: Sequence[float],
    reference: float,
    fit_orders: Sequence[int],
) -> tuple[tuple[StudyPoint, ...], FitResult]:
    points = tuple(
        StudyPoint(
            n=float(n),
            value=v,
            reference=reference,
            rel_error=abs(v - reference) / abs(reference),
        )
        for n, v in zip(orders, values)
    )
    window = {float(n) for n in fit_orders}
    fit = fit_log_linear(
        [(p.n, p.rel_error) for p in points if p.n in window and p.rel_error > 0.0]
    )
    return points, fit


def duffing_b0_study(max_order: int, fit_start: int = 1) -> ConvergenceStudy:
    """Error decay of the quartic strong-coupling coefficient sequence.

    Computes b0^(N) for N = 0..max_order against the oracle value
    2 pi / (lim sqrt(rho) T), and fits ln(rel_error) over N = fit_start..max_order
    (N = 0 is excluded by default as a transient).
    """
    if max_order < 3:
        raise DomainError("max_order must be >= 3")
    reference = 2.0 * math.pi / even_power_exact_period(2, math.inf)
    orders = range(max_order + 1)
    values = [duffing_b0(n) for n in orders]
    points, fit = _points_and_fit(
        orders, values, reference, range(fit_start, max_order + 1)
    )
    return ConvergenceStudy(label="duffing-b0", points=points, fit=fit)


def duffing_error_vs_rho(
    rho_grid: Sequence[float], order: int = 2
) -> ConvergenceStudy:
    """Frequency error of a fixed-order partial sum across anharmonicities.

    For each rho in the grid, compares 2 pi / T_series(rho, order) with the
    exact frequency.  The error grows with rho toward the asymptote given by
    the strong-coupling coefficient error at the same order, and stays below
    it; that bound is enforced here.
    """
    if not rho_grid:
        raise DomainError("rho_grid must not be empty")
    if any(r <= -1.0 for r in rho_grid):
        raise DomainError("all grid points must satisfy rho > -1")
    b0_ref = 2.0 * math.pi / even_power_exact_period(2, math.inf)
    asymptote = abs(duffing_b0(order) - b0_ref) / b0_ref
    points = []
    for rho in rho_grid:
        freq = 2.0 * math.pi / duffing_period_series(rho, order)
        freq_exact = 2.0 * math.pi / duffing_exact_period(rho)
        rel = abs(freq - freq_exact) / freq_exact
        if rel > asymptote * (1.0 + 1e-9):
            raise PmsDeltaError(
                f"error {rel!r} at rho = {rho!r} exceeds the strong-coupling "
                f"asymptote {asymptote!r}; this should be impossible"
            )
        points.append(
            StudyPoint(n=float(rho), value=freq, reference=freq_exact, rel_error=rel)
        )
    return ConvergenceStudy(label=f"duffing-rho-order{order}", points=tuple(points))


def sextic_c0_study(max_order: int, fit_start: int = 2) -> ConvergenceStudy:
    """Error decay of the sextic strong-coupling coefficient sequence.

    Computes c0^(N) = lim sqrt(rho) T at expansion orders N = 0..max_order
    (first-order stationary kappa throughout) against the oracle limit.
    The fit runs over even N from fit_start up, because the even and odd
    subsequences decay along two distinct tracks.
    """
    if max_order < 3:
        raise DomainError("max_order must be >= 3")
    kappa = even_power_kappa_pms(3)
    reference = even_power_exact_period(3, math.inf)
    orders = range(max_order + 1)
    values = [even_power_series(3, math.inf, kappa, n) for n in orders]
    fit_orders = [n for n in range(fit_start, max_order + 1) if n % 2 == 0]
    points, fit = _points_and_fit(orders, values, reference, fit_orders)
    return ConvergenceStudy(label="sextic-c0", points=points, fit=fit)


def negative_rho_study(
    K: int, rho: float = -0.9, max_order: int = 16
) -> tuple[ConvergenceStudy, ConvergenceStudy]:
    """Even- and odd-order error tracks for a softened even-power oscillator.

    Expands the period at the first-order stationary kappa for orders
    N = 1..max_order and splits the errors by parity: the two subsequences
    decay exponentially along separate lines, the even one lying below the
    odd one at matched positions.  Returns (even_study, odd_study).
    """
    if K not in (3, 4, 5):
        raise DomainError(f"K must be 3, 4 or 5, got {K!r}")
    if max_order < 6:
        raise DomainError("max_order must be >= 6")
    kappa = even_power_kappa_pms(K)
    reference = even_power_exact_period(K, rho)
    studies = []
    for parity, tag in ((0, "even"), (1, "odd")):
        orders = [n for n in range(1, max_order + 1) if n % 2 == parity]
        values = [even_power_series(K, rho, kappa, n) for n in orders]
        points, fit = _points_and_fit(orders, values, reference, orders)
        studies.append(
            ConvergenceStudy(label=f"negative-rho-K{K}-{tag}", points=points, fit=fit)
        )
    even_study, odd_study = studies
    return even_study, odd_study


def precession_error_table(
    a_grid: Sequence[float],
    orders: Sequence[int],
    GM: float = DEFAULT_GM,
    eccentricity: float = DEFAULT_ECCENTRICITY,
) -> list[ConvergenceStudy]:
    """Series-vs-exact precession error across semimajor axes, per order.

    Returns one study per requested order, each sharing the same a-grid
    abscissas.  Sub-critical grid points propagate ThirdRootInsideInterval
    from the exact evaluation.
    """
    if not a_grid:
        raise DomainError("a_grid must not be empty")
    if not orders:
        raise DomainError("orders must not be empty")
    exact_values = {}
    for a in a_grid:
        orbit = OrbitParams(GM=GM, a=a, epsilon=eccentricity)
        exact_values[a] = precession_exact(orbit)
    studies = []
    for order in orders:
        points = []
        for a in a_grid:
            orbit = OrbitParams(GM=GM, a=a, epsilon=eccentricity)
            value = precession_series(orbit, order)
            reference = exact_values[a]
            points.append(
                StudyPoint(
                    n=float(a),
                    value=value,
                    reference=reference,
                    rel_error=abs(value - reference) / abs(reference),
                )
            )
        studies.append(
            ConvergenceStudy(label=f"precession-order{order}", points=tuple(points))
        )
    return studies
