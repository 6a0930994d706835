#!/usr/bin/env python3
"""Duffing oscillator: series accuracy across orders and anharmonicities.

Prints the period partial sums against the elliptic-integral value, then the
fixed-order frequency error across a wide rho sweep to show it saturating at
the strong-coupling asymptote instead of blowing up.
"""

import math

from pmsdelta import (
    duffing_b0,
    duffing_error_vs_rho,
    duffing_exact_period,
    duffing_period_series,
    even_power_exact_period,
)


def period_table(rho: float) -> None:
    exact = duffing_exact_period(rho)
    print(f"rho = {rho}: exact period {exact:.15f}")
    print("order   period               rel_error")
    for order in range(0, 11, 2):
        value = duffing_period_series(rho, order)
        rel = abs(value - exact) / exact
        print(f"{order:5d}   {value:.15f}   {rel:.3e}")
    print()


def rho_sweep() -> None:
    grid = [10.0 ** k for k in range(-2, 7)]
    study = duffing_error_vs_rho(grid, order=2)
    b0_ref = 2.0 * math.pi / even_power_exact_period(2, math.inf)
    asymptote = abs(duffing_b0(2) - b0_ref) / b0_ref
    print("second-order frequency error vs rho (asymptote "
          f"{asymptote:.6e} from the strong-coupling coefficient):")
    for p in study.points:
        bar = "#" * max(1, int(60 * p.rel_error / asymptote))
        print(f"rho={p.n:<10g} err={p.rel_error:.3e} {bar}")


if __name__ == "__main__":
    period_table(1.0)
    period_table(100.0)
    period_table(-0.9)
    rho_sweep()
