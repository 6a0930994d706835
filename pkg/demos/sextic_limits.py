#!/usr/bin/env python3
"""Quadratic-sextic oscillator: closed-form approximants against the oracle.

Compares the fourth-order closed form and a published two-parameter formula
against adaptive quadrature, at a soft negative anharmonicity and in the
strong-coupling limit where the period scales like 1/sqrt(rho).
"""

import math

from pmsdelta import (
    REFERENCE,
    sextic_exact_period,
    sextic_series,
    sextic_t4,
    sextic_wl_period,
)


def soft_point() -> None:
    rho = -0.9
    exact = sextic_exact_period(rho)
    print(f"rho = {rho}")
    print(f"  exact (quadrature)   {exact:.9f}")
    print(f"  fourth-order         {sextic_t4(rho):.9f}")
    print(f"  comparison formula   {sextic_wl_period(rho):.9f}")
    print(f"  published references {float(REFERENCE.sextic_soft_fourth_order)}"
          f" / {float(REFERENCE.sextic_soft_wu_li)}")
    print()


def strong_coupling() -> None:
    print("strong-coupling limit c0 = lim sqrt(rho) * T:")
    rho = 1e12
    print(f"  exact                {float(REFERENCE.sextic_c0_exact):.9f}")
    print(f"  fourth-order         {math.sqrt(rho) * sextic_t4(rho):.9f}")
    print(f"  comparison formula   {math.sqrt(rho) * sextic_wl_period(rho):.9f}")
    print()
    print("series partial sums at rho = 1e6 (scaled by sqrt(rho)):")
    scale = math.sqrt(1e6)
    exact = scale * sextic_exact_period(1e6)
    for order in range(0, 9, 2):
        value = scale * sextic_series(1e6, order)
        print(f"  N={order}: {value:.9f}   rel err {abs(value - exact) / exact:.3e}")


if __name__ == "__main__":
    soft_point()
    strong_coupling()
