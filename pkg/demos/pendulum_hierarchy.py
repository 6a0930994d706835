#!/usr/bin/env python3
"""Simple pendulum: truncated-potential approximations vs the elliptic period.

Shows the hierarchy of cosine-potential truncations (quadratic, quartic,
sextic Taylor pieces) and the gain from the second-order series term on top
of the sextic truncation at large amplitude.
"""

from pmsdelta import pendulum_approx, pendulum_exact


def main() -> None:
    print("amplitude   exact        taylor2      taylor4      taylor6      taylor6+N2")
    for amplitude in (0.25, 0.5, 1.0, 1.5, 2.0):
        exact = pendulum_exact(amplitude)
        t2 = pendulum_approx(amplitude, 2, 0)
        t4 = pendulum_approx(amplitude, 4, 0)
        t6 = pendulum_approx(amplitude, 6, 0)
        t6n2 = pendulum_approx(amplitude, 6, 2)
        print(f"{amplitude:9.2f}   {exact:.8f}   {t2:.8f}   {t4:.8f}   "
              f"{t6:.8f}   {t6n2:.8f}")
    print()
    print("relative errors at A = 2.0:")
    exact = pendulum_exact(2.0)
    for label, taylor, order in (("taylor4", 4, 0), ("taylor6", 6, 0),
                                 ("taylor6+N2", 6, 2)):
        value = pendulum_approx(2.0, taylor, order)
        print(f"  {label:11s} {abs(value - exact) / exact:.3e}")


if __name__ == "__main__":
    main()
