#!/usr/bin/env python3
"""Perihelion precession of a strongly relativistic orbit.

Sweeps the semimajor axis down toward the critical value where the cubic's
third root enters the radial range, comparing the closed-form series with
adaptive quadrature, in arcseconds per orbit.
"""

import math

from pmsdelta import (
    DEFAULT_ECCENTRICITY,
    DEFAULT_GM,
    OrbitParams,
    critical_semimajor_axis,
    precession_exact,
    precession_series,
)

ARCSEC = 180.0 * 3600.0 / math.pi


def main() -> None:
    GM = DEFAULT_GM
    eps = DEFAULT_ECCENTRICITY
    a_c = critical_semimajor_axis(GM, eps)
    print(f"GM = {GM} m, eccentricity = {eps}")
    print(f"critical semimajor axis a_c = {a_c:.6f} m")
    print()
    print("a/a_c    exact (arcsec/orbit)   series N=2     series N=6")
    for ratio in (10.0, 5.0, 3.0, 2.0, 1.5, 1.2, 1.05, 1.01):
        orbit = OrbitParams(GM=GM, a=ratio * a_c, epsilon=eps)
        exact = precession_exact(orbit) * ARCSEC
        s2 = precession_series(orbit, 2) * ARCSEC
        s6 = precession_series(orbit, 6) * ARCSEC
        print(f"{ratio:5.2f}    {exact:18.6f}   {s2:12.6f}   {s6:12.6f}")
    print()
    print("the precession grows without bound as a approaches a_c;")
    print("below a_c the quadrature refuses (the factor turns negative) while")
    print("the series remains finite and is marked as extrapolation by the CLI.")


if __name__ == "__main__":
    main()
