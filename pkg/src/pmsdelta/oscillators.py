"""Oscillator families: turning points, stationary frequencies, period series.

Each family factors E - V(x) = R(x) (x - x-)(x+ - x) between its turning
points, maps R onto a polynomial in cos(theta), and hands the result to the
expansion engine.  The period is sqrt(2) times the expanded integral.  Closed
forms are provided where the series collapses to a known hypergeometric-style
sum, together with exact reference periods computed through the independent
oracle.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

import numpy as np

from .errors import (
    BarrierCrossed,
    DivergentExpansion,
    DomainError,
    NonPositiveMean,
    NoPeriodicMotion,
)
from .oracle import elliptic_k, integrate
from .series_core import (
    IntegrandSpec,
    TrigPolynomial,
    expand,
    half_binomial,
    kappa_balance,
    pms_first_order,
)

__all__ = [
    "OscillatorModel",
    "TurningPoints",
    "turning_points",
    "duffing_omega_pms",
    "duffing_period_series",
    "duffing_exact_period",
    "duffing_nayfeh_series",
    "duffing_b0",
    "virial_omega_check",
    "sextic_wl_period",
    "sextic_t4",
    "sextic_series",
    "sextic_exact_period",
    "even_power_series",
    "even_power_exact_period",
    "even_power_kappa_pms",
    "even_power_kappa_balanced",
    "cubic_series",
    "cubic_exact_period",
    "quartic_cubic_pms",
    "quartic_cubic_exact_period",
    "pendulum_exact",
    "pendulum_approx",
]

_EVEN_FAMILY_EXPONENT = {"duffing": 2, "sextic": 3}


@dataclass(frozen=True)
class OscillatorModel:
    """A potential family tag with its parameters.

    family is one of "duffing", "sextic", "even_power", "cubic",
    "quartic_cubic", "pendulum".  Exactly one of amplitude or energy is set:
    the even families and the pendulum are parametrized by amplitude, the
    cubic families by the energy implied by their turning points.  Use the
    classmethod constructors rather than filling fields by hand.
    """

    family: str
    params: Mapping[str, float]
    amplitude: float | None = None
    energy: float | None = None

    @classmethod
    def duffing(cls, mu: float, amplitude: float) -> "OscillatorModel":
        """V(x) = x^2/2 + mu x^4/4 at the given amplitude."""
        _require_positive_amplitude(amplitude)
        return cls("duffing", {"mu": float(mu)}, amplitude=float(amplitude))

    @classmethod
    def sextic(cls, mu: float, amplitude: float) -> "OscillatorModel":
        """V(x) = x^2/2 + mu x^6/6 at the given amplitude."""
        _require_positive_amplitude(amplitude)
        return cls("sextic", {"mu": float(mu)}, amplitude=float(amplitude))

    @classmethod
    def even_power(cls, K: int, mu: float, amplitude: float) -> "OscillatorModel":
        """V(x) = x^2/2 + mu x^(2K)/(2K) at the given amplitude."""
        if int(K) != K or K < 2:
            raise DomainError(f"even-power exponent K must be an integer >= 2, got {K!r}")
        _require_positive_amplitude(amplitude)
        return cls(
            "even_power", {"K": int(K), "mu": float(mu)}, amplitude=float(amplitude)
        )

    @classmethod
    def cubic(cls, x_minus: float, x_plus: float) -> "OscillatorModel":
        """V(x) = x^2/2 + mu x^3/3, parametrized by its turning points.

        The pair (x-, x+) fixes both the cubic strength mu and the energy:
        mu = -(3/2)(x- + x+)/(x+^2 + x+ x- + x-^2) and E = V at either end.
        """
        x_minus, x_plus = float(x_minus), float(x_plus)
        if not x_minus < 0.0 < x_plus:
            raise DomainError(
                f"cubic turning points must straddle the origin, got "
                f"({x_minus!r}, {x_plus!r})"
            )
        s = x_minus + x_plus
        sigma = x_plus**2 + x_plus * x_minus + x_minus**2
        mu = -1.5 * s / sigma
        p = x_minus * x_plus
        energy = p * p / (2.0 * sigma)
        return cls(
            "cubic",
            {"mu": mu, "x_minus": x_minus, "x_plus": x_plus},
            energy=energy,
        )

    @classmethod
    def quartic_cubic(
        cls, a2: float, a3: float, a4: float, x_minus: float, x_plus: float
    ) -> "OscillatorModel":
        """V(x) = a2 x^2 + a3 x^3 + a4 x^4 between the given turning points.

        The two points must sit at equal potential; the shared value is the
        energy of the motion.
        """
        x_minus, x_plus = float(x_minus), float(x_plus)
        if not x_minus < x_plus:
            raise DomainError("need x_minus < x_plus")

        def v(x):
            return a2 * x * x + a3 * x**3 + a4 * x**4

        v_lo, v_hi = v(x_minus), v(x_plus)
        scale = max(abs(v_lo), abs(v_hi), 1e-300)
        if abs(v_lo - v_hi) > 1e-12 * scale:
            raise DomainError(
                f"turning points are not at equal potential: "
                f"V(x_minus) = {v_lo!r}, V(x_plus) = {v_hi!r}"
            )
        return cls(
            "quartic_cubic",
            {
                "a2": float(a2),
                "a3": float(a3),
                "a4": float(a4),
                "x_minus": x_minus,
                "x_plus": x_plus,
            },
            energy=0.5 * (v_lo + v_hi),
        )

    @classmethod
    def pendulum(cls, amplitude: float, taylor_order: int) -> "OscillatorModel":
        """V(x) = 1 - cos(x), truncated at the given Taylor order in x."""
        if taylor_order not in (2, 4, 6):
            raise DomainError(f"taylor_order must be 2, 4 or 6, got {taylor_order!r}")
        amplitude = float(amplitude)
        if not 0.0 < amplitude < math.pi:
            raise DomainError(
                f"pendulum amplitude must lie in (0, pi), got {amplitude!r}"
            )
        return cls(
            "pendulum", {"taylor_order": int(taylor_order)}, amplitude=amplitude
        )


@dataclass(frozen=True)
class TurningPoints:
    """Turning points with the factor polynomial of the motion between them.

    rho is the dimensionless anharmonicity mu * A^(2K-2) for the even-power
    families (and the equivalent quantity for Taylor-truncated pendula); it is
    NaN for families where no single such combination exists.
    """

    x_minus: float
    x_plus: float
    factor: TrigPolynomial
    rho: float = field(default=math.nan)

    def spec_at(self, omega: float | None = None) -> IntegrandSpec:
        """IntegrandSpec at the given reference frequency.

        Defaults to the first-order stationary frequency of the factor.
        """
        if omega is None:
            omega = pms_first_order(self.factor)
        return IntegrandSpec(self.x_minus, self.x_plus, self.factor, omega)


def _require_positive_amplitude(amplitude: float) -> None:
    if not amplitude > 0.0:
        raise DomainError(f"amplitude must be positive, got {amplitude!r}")


def _even_factor(K: int, rho: float) -> TrigPolynomial:
    """Factor polynomial of V = x^2/2 + mu x^(2K)/(2K) at unit amplitude.

    R(theta) = 1/2 + (rho/2K) * sum_{j<K} cos^(2j) theta; strictly positive
    for every rho > -1.
    """
    coeffs = [0.0] * (2 * K - 1)
    coeffs[0] = 0.5 + rho / (2.0 * K)
    for j in range(1, K):
        coeffs[2 * j] = rho / (2.0 * K)
    return TrigPolynomial(coeffs)


def _strong_coupling_factor(K: int) -> TrigPolynomial:
    """Rho -> infinity factor, scaled by 1/rho: g(theta)/(2K)."""
    coeffs = [0.0] * (2 * K - 1)
    for j in range(K):
        coeffs[2 * j] = 1.0 / (2.0 * K)
    return TrigPolynomial(coeffs)


def _even_rho(mu: float, amplitude: float, K: int) -> float:
    rho = mu * amplitude ** (2 * K - 2)
    if rho <= -1.0:
        raise NoPeriodicMotion(
            f"rho = mu*A^(2K-2) = {rho!r} must exceed -1 for periodic motion"
        )
    return rho


def _pendulum_factor(amplitude: float, taylor_order: int) -> TrigPolynomial:
    a2 = amplitude * amplitude
    if taylor_order == 2:
        return TrigPolynomial([0.5])
    if taylor_order == 4:
        # Quartic family with mu = -1/6.
        return _even_factor(2, -a2 / 6.0)
    a4 = a2 * a2
    return TrigPolynomial(
        [
            0.5 - a2 / 24.0 + a4 / 720.0,
            0.0,
            -a2 / 24.0 + a4 / 720.0,
            0.0,
            a4 / 720.0,
        ]
    )


def _cubic_factor(x_minus: float, x_plus: float) -> tuple[TrigPolynomial, float]:
    """Factor polynomial in theta for the cubic family, plus the ratio xi.

    Validates that the pair brackets single-well periodic motion: the third
    zero of the cubic must lie outside [x-, x+], or equivalently the energy
    must stay below the barrier top.
    """
    s = x_minus + x_plus
    p = x_minus * x_plus
    sigma = x_plus**2 + x_plus * x_minus + x_minus**2
    if s != 0.0:
        # Strict checks: the separatrix itself (third zero AT a turning point)
        # still factors cleanly, though the period there is infinite.
        third_zero = -p / s
        if x_minus < third_zero < x_plus:
            raise BarrierCrossed(
                f"the third zero {third_zero!r} of the cubic lies inside "
                f"({x_minus!r}, {x_plus!r}): the energy exceeds the barrier and "
                "the motion is not periodic in a single well"
            )
        mu = -1.5 * s / sigma
        energy = p * p / (2.0 * sigma)
        barrier = 1.0 / (6.0 * mu * mu)
        if energy > barrier:
            raise BarrierCrossed(
                f"energy {energy!r} exceeds the barrier {barrier!r}"
            )
    b0 = -p / (2.0 * sigma)
    b1 = -s / (2.0 * sigma)
    m = 0.5 * (x_minus + x_plus)
    h = 0.5 * (x_plus - x_minus)
    factor = TrigPolynomial([b0 + b1 * m, b1 * h])
    denom = x_plus**2 + 4.0 * p + x_minus**2
    if denom >= 0.0:
        raise NoPeriodicMotion(
            "no real stationary frequency for this turning-point pair"
        )
    xi = (x_plus**2 - x_minus**2) / denom
    return factor, xi


def _quartic_cubic_factor(
    a2: float, a3: float, a4: float, x_minus: float, x_plus: float
) -> TrigPolynomial:
    s = x_minus + x_plus
    p = x_minus * x_plus
    b0 = a2 + a3 * s + a4 * (s * s - p)
    b1 = a3 + a4 * s
    b2 = a4
    m = 0.5 * s
    h = 0.5 * (x_plus - x_minus)
    return TrigPolynomial(
        [b0 + b1 * m + b2 * m * m, (b1 + 2.0 * b2 * m) * h, b2 * h * h]
    )


def turning_points(model: OscillatorModel) -> TurningPoints:
    """Turning points and factor polynomial for any supported model."""
    if model.family in _EVEN_FAMILY_EXPONENT or model.family == "even_power":
        K = _EVEN_FAMILY_EXPONENT.get(model.family) or int(model.params["K"])
        amplitude = model.amplitude
        rho = _even_rho(model.params["mu"], amplitude, K)
        return TurningPoints(-amplitude, amplitude, _even_factor(K, rho), rho)
    if model.family == "cubic":
        x_minus, x_plus = model.params["x_minus"], model.params["x_plus"]
        factor, _ = _cubic_factor(x_minus, x_plus)
        return TurningPoints(x_minus, x_plus, factor)
    if model.family == "quartic_cubic":
        x_minus, x_plus = model.params["x_minus"], model.params["x_plus"]
        factor = _quartic_cubic_factor(
            model.params["a2"],
            model.params["a3"],
            model.params["a4"],
            x_minus,
            x_plus,
        )
        return TurningPoints(x_minus, x_plus, factor)
    if model.family == "pendulum":
        amplitude = model.amplitude
        order = int(model.params["taylor_order"])
        rho = {2: 0.0, 4: -amplitude**2 / 6.0}.get(order, math.nan)
        return TurningPoints(
            -amplitude, amplitude, _pendulum_factor(amplitude, order), rho
        )
    raise DomainError(f"unknown oscillator family {model.family!r}")


# ---------------------------------------------------------------------------
# Quartic anharmonic family (V = x^2/2 + mu x^4/4)
# ---------------------------------------------------------------------------


def _check_rho(rho: float) -> float:
    rho = float(rho)
    if rho <= -1.0:
        raise NoPeriodicMotion(f"rho must exceed -1 for periodic motion, got {rho!r}")
    return rho


def duffing_omega_pms(rho: float) -> float:
    """First-order stationary frequency sqrt((4 + 3 rho)/8)."""
    rho = _check_rho(rho)
    return math.sqrt((4.0 + 3.0 * rho) / 8.0)


def duffing_period_series(rho: float, order: int) -> float:
    """Period partial sum through pair index `order`.

    T = 4 pi / sqrt(4 + 3 rho) * sum_n (-1)^n hb(n) hb(2n) xi^(2n) with
    xi = rho/(4 + 3 rho); hb is the half-integer binomial.  Only even
    expansion terms contribute, so `order` counts pairs: the value equals
    the full expansion truncated at Delta-order 2*order.
    """
    rho = _check_rho(rho)
    if order < 0:
        raise DomainError("order must be >= 0")
    xi = rho / (4.0 + 3.0 * rho)
    prefactor = 4.0 * math.pi / math.sqrt(4.0 + 3.0 * rho)
    return prefactor * math.fsum(
        (-1.0) ** n * half_binomial(n) * half_binomial(2 * n) * xi ** (2 * n)
        for n in range(order + 1)
    )


def duffing_exact_period(rho: float) -> float:
    """Exact period 4/sqrt(1+rho) K(rho/(2(1+rho))) via the AGM oracle."""
    rho = float(rho)
    if rho <= -1.0:
        raise DomainError(f"exact period requires rho > -1, got {rho!r}")
    return 4.0 / math.sqrt(1.0 + rho) * elliptic_k(rho / (2.0 * (1.0 + rho)))


def duffing_nayfeh_series(rho: float, order: int) -> float:
    """Classic perturbation series of Nayfeh (1981) for the same period.

    T = 2 pi / sqrt(1+rho) * sum_n hb(n)^2 kappa^n with kappa = rho/(2(1+rho)).
    Retained as a comparison: |kappa| exceeds 1 for -1 < rho < -2/3, where
    this sum fails to converge although the motion is perfectly periodic.
    """
    rho = _check_rho(rho)
    if order < 0:
        raise DomainError("order must be >= 0")
    kappa = rho / (2.0 * (1.0 + rho))
    prefactor = 2.0 * math.pi / math.sqrt(1.0 + rho)
    return prefactor * math.fsum(
        half_binomial(n) ** 2 * kappa**n for n in range(order + 1)
    )


def duffing_b0(order: int) -> float:
    """Strong-coupling frequency coefficient b0 from the order-N partial sum.

    b0^(N) = sqrt(3) / (2 sum_{j<=N} (-1/9)^j hb(j) hb(2j)); the sequence
    converges geometrically to the pure-quartic limit 2 pi/(sqrt(mu) T).
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    total = math.fsum(
        (-1.0 / 9.0) ** j * half_binomial(j) * half_binomial(2 * j)
        for j in range(order + 1)
    )
    return math.sqrt(3.0) / (2.0 * total)


def virial_omega_check(rho: float) -> tuple[float, float]:
    """Frequency from the virial balance of a trial cosine motion.

    For x(t) = A cos(omega t + phi), requiring the time averages to satisfy
    <xdot^2> = <x^2> + mu <x^4> gives omega^2 = 1 + (3/4) rho.  Returns that
    frequency and its ratio to the first-order stationary frequency; the
    ratio is sqrt(2) identically in rho.
    """
    rho = _check_rho(rho)
    mean_sq = 0.5  # <cos^2> over a period
    mean_quart = 3.0 / 8.0  # <cos^4>
    omega_virial = math.sqrt((mean_sq + rho * mean_quart) / mean_sq)
    return omega_virial, omega_virial / duffing_omega_pms(rho)


# ---------------------------------------------------------------------------
# Quadratic-sextic family (V = x^2/2 + mu x^6/6)
# ---------------------------------------------------------------------------


def sextic_wl_period(rho: float) -> float:
    """Closed-form period approximation of Wu and Li (2001).

    T = 24 pi / sqrt(80 + 50 rho + sqrt(4096 + 5120 rho + 925 rho^2));
    comparison value only.
    """
    rho = float(rho)
    if rho <= -1.0:
        raise DomainError(f"requires rho > -1, got {rho!r}")
    inner = 4096.0 + 5120.0 * rho + 925.0 * rho * rho
    outer = 80.0 + 50.0 * rho + math.sqrt(inner)
    return 24.0 * math.pi / math.sqrt(outer)


def sextic_t4(rho: float) -> float:
    """Fourth-order closed form of the sextic period series.

    T4 = sqrt(2) pi (6097185 rho^4 + 37821440 rho^3 + 89272320 rho^2
         + 94371840 rho + 37748736) / (2304 (5 rho + 8)^(9/2)).
    The constant term 37748736 is pinned by the harmonic limit T4(0) = 2 pi
    and by term-by-term agreement with sextic_series(rho, 4).
    """
    rho = float(rho)
    if rho <= -1.6:
        raise DomainError(f"requires rho > -8/5, got {rho!r}")
    numerator = (
        6097185.0 * rho**4
        + 37821440.0 * rho**3
        + 89272320.0 * rho**2
        + 94371840.0 * rho
        + 37748736.0
    )
    return math.sqrt(2.0) * math.pi * numerator / (2304.0 * (5.0 * rho + 8.0) ** 4.5)


@lru_cache(maxsize=None)
def _sextic_weight(n: int) -> float:
    """Moment weight J_n: (1/pi) * integral of (8 cos 2t + cos 4t)^n over [0, pi].

    Evaluated by the exact combinatorial triple sum
    J_n = sum_{k1<=n} sum_{k2<=k1} sum_{k3<=n-k1} 2^(3k1-n) C(n,k1) C(k1,k2)
          C(n-k1,k3) [k1 = 2n - 2k2 - 4k3],
    in exact rational arithmetic.
    """
    total = Fraction(0)
    for k1 in range(n + 1):
        for k2 in range(k1 + 1):
            for k3 in range(n - k1 + 1):
                if k1 != 2 * n - 2 * k2 - 4 * k3:
                    continue
                total += (
                    Fraction(2) ** (3 * k1 - n)
                    * math.comb(n, k1)
                    * math.comb(k1, k2)
                    * math.comb(n - k1, k3)
                )
    return float(total)


def sextic_series(rho: float, order: int) -> float:
    """Sextic period partial sum through Delta-order `order`.

    T = sum_n 4 sqrt(2) pi / sqrt(5 rho + 8) * hb(n) * [rho/(3(5 rho + 8))]^n
        * J_n, with J_n from _sextic_weight.  Uses the first-order stationary
    frequency at every order.  Agrees term by term with the generic expansion
    of the factor polynomial.
    """
    rho = _check_rho(rho)
    if order < 0:
        raise DomainError("order must be >= 0")
    xi = rho / (3.0 * (5.0 * rho + 8.0))
    prefactor = 4.0 * math.sqrt(2.0) * math.pi / math.sqrt(5.0 * rho + 8.0)
    return prefactor * math.fsum(
        half_binomial(n) * xi**n * _sextic_weight(n) for n in range(order + 1)
    )


def sextic_exact_period(rho: float) -> float:
    """Exact sextic period by adaptive quadrature.

    T = 2 sqrt(3)/sqrt(rho+3) * integral over [0, pi] of
    dtheta / sqrt(1 + rho/(rho+3) (cos^2 + cos^4)).
    """
    rho = float(rho)
    if rho <= -1.0:
        raise DomainError(f"requires rho > -1, got {rho!r}")
    ratio = rho / (rho + 3.0)

    def integrand(theta: float) -> float:
        c2 = math.cos(theta) ** 2
        return 1.0 / math.sqrt(1.0 + ratio * (c2 + c2 * c2))

    result = integrate(integrand, 0.0, math.pi, abs_tol=1e-13)
    return 2.0 * math.sqrt(3.0) / math.sqrt(rho + 3.0) * result.value


# ---------------------------------------------------------------------------
# General even-power family (V = x^2/2 + mu x^(2K)/(2K))
# ---------------------------------------------------------------------------


def _check_exponent(K: int) -> int:
    if int(K) != K or K < 2:
        raise DomainError(f"even-power exponent K must be an integer >= 2, got {K!r}")
    return int(K)


def even_power_kappa_pms(K: int) -> float:
    """First-order stationary kappa: mean of the strong-coupling profile.

    kappa = (1/K) sum_{j<K} C(2j, j)/4^j; makes omega^2 = (1 + kappa rho)/2
    the theta-average of the factor polynomial for every rho.
    """
    K = _check_exponent(K)
    return math.fsum(math.comb(2 * j, j) / 4.0**j for j in range(K)) / K


def even_power_kappa_balanced(K: int) -> float:
    """Kappa at which the deviation polynomial has extrema of equal size.

    Independent of rho for this family; found by the generic balancing
    search on the strong-coupling deviation.  Equals (K+1)/(2K), which keeps
    max |Delta| = (K-1)/(K+1) strictly below 1 for every K.
    """
    K = _check_exponent(K)
    profile = _strong_coupling_factor(K)

    def family(kappa: float) -> TrigPolynomial:
        return profile.scaled(2.0 / kappa).shifted(-1.0)

    lo = 1.0 / K  # Delta(pi/2) > 0: imbalance positive
    hi = 1.0  # Delta <= 0 everywhere: imbalance negative
    return kappa_balance(family, (lo, hi))


def _even_power_spec(K: int, rho: float, kappa: float) -> IntegrandSpec:
    if math.isinf(rho) and rho > 0:
        factor = _strong_coupling_factor(K)
        omega_sq = kappa / 2.0
    else:
        rho = _check_rho(rho)
        factor = _even_factor(K, rho)
        omega_sq = (1.0 + kappa * rho) / 2.0
    if omega_sq <= 0.0:
        raise DomainError(
            f"omega^2 = (1 + kappa rho)/2 = {omega_sq!r} must be positive"
        )
    return IntegrandSpec(-1.0, 1.0, factor, math.sqrt(omega_sq))


def even_power_series(K: int, rho: float, kappa: float, order: int) -> float:
    """Period partial sum for the even-power family at a caller-chosen kappa.

    The reference frequency is omega^2 = (1 + kappa rho)/2.  Returns
    sqrt(2) S_N.  With rho = math.inf the scaled problem is expanded instead
    and the return value is the strong-coupling coefficient estimate
    c0^(N) = lim sqrt(rho) T.  Emits a DivergentExpansion warning when the
    deviation polynomial reaches magnitude 1 somewhere on [0, pi], in which
    case the partial sums are not expected to converge.
    """
    K = _check_exponent(K)
    spec = _even_power_spec(K, rho, kappa)
    deviation = spec.factor.scaled(1.0 / spec.omega**2).shifted(-1.0)
    grid = np.linspace(0.0, math.pi, 2048)
    max_dev = float(np.max(np.abs(deviation.evaluate(grid))))
    if max_dev >= 1.0:
        warnings.warn(
            f"max |Delta| = {max_dev:.6f} >= 1 at kappa = {kappa!r}: "
            "the expansion need not converge",
            DivergentExpansion,
            stacklevel=2,
        )
    return math.sqrt(2.0) * expand(spec, order).value


def even_power_exact_period(K: int, rho: float) -> float:
    """Exact even-power period by adaptive quadrature of sqrt(2)/sqrt(R).

    With rho = math.inf, returns the strong-coupling coefficient
    c0 = lim sqrt(rho) T = 2 sqrt(K) * integral of dtheta/sqrt(g(theta)),
    g = sum_{j<K} cos^(2j).
    """
    K = _check_exponent(K)
    if math.isinf(rho) and rho > 0:
        factor = _strong_coupling_factor(K)
    else:
        rho = _check_rho(rho)
        factor = _even_factor(K, rho)

    def integrand(theta: float) -> float:
        return 1.0 / math.sqrt(float(factor.evaluate(theta)))

    result = integrate(integrand, 0.0, math.pi, abs_tol=1e-13)
    return math.sqrt(2.0) * result.value


# ---------------------------------------------------------------------------
# Cubic family (V = x^2/2 + mu x^3/3) and the general quartic-cubic potential
# ---------------------------------------------------------------------------


def cubic_series(x_minus: float, x_plus: float, order: int) -> float:
    """Cubic-well period partial sum through pair index `order`.

    T = sqrt(2) pi/omega * sum_j (-1)^j hb(j) hb(2j) xi^(2j) with
    xi = (x+^2 - x-^2)/(x+^2 + 4 x+ x- + x-^2); the same coefficient pattern
    as the quartic family.  Odd expansion terms vanish identically at the
    stationary frequency, so `order` counts pairs.
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    x_minus, x_plus = float(x_minus), float(x_plus)
    if not x_minus < 0.0 < x_plus:
        raise DomainError(
            f"cubic turning points must straddle the origin, got "
            f"({x_minus!r}, {x_plus!r})"
        )
    factor, xi = _cubic_factor(x_minus, x_plus)
    omega = pms_first_order(factor)
    return (
        math.sqrt(2.0)
        * math.pi
        / omega
        * math.fsum(
            (-1.0) ** j * half_binomial(j) * half_binomial(2 * j) * xi ** (2 * j)
            for j in range(order + 1)
        )
    )


def cubic_exact_period(x_minus: float, x_plus: float) -> float:
    """Exact cubic-well period: sqrt(2) times the quadrature of 1/sqrt(R)."""
    x_minus, x_plus = float(x_minus), float(x_plus)
    if not x_minus < 0.0 < x_plus:
        raise DomainError(
            f"cubic turning points must straddle the origin, got "
            f"({x_minus!r}, {x_plus!r})"
        )
    factor, _ = _cubic_factor(x_minus, x_plus)

    def integrand(theta: float) -> float:
        return 1.0 / math.sqrt(float(factor.evaluate(theta)))

    result = integrate(integrand, 0.0, math.pi, abs_tol=1e-13)
    return math.sqrt(2.0) * result.value


def quartic_cubic_pms(
    a2: float, a3: float, a4: float, x_minus: float, x_plus: float
) -> tuple[float, float, float]:
    """Stationary frequency and leading periods for V = a2 x^2 + a3 x^3 + a4 x^4.

    Returns (omega, T0, T2): the first-order stationary frequency, the
    zeroth-order period sqrt(2) pi/omega, and the second-order period
    sqrt(2) (I0 + I2) from the generic expansion.
    """
    model = OscillatorModel.quartic_cubic(a2, a3, a4, x_minus, x_plus)
    points = turning_points(model)
    grid = np.linspace(0.0, math.pi, 512)
    if not np.all(points.factor.evaluate(grid) > 0.0):
        raise NoPeriodicMotion(
            "factor polynomial is not positive between the turning points"
        )
    try:
        omega = pms_first_order(points.factor)
    except NonPositiveMean as exc:
        raise NoPeriodicMotion(str(exc)) from exc
    series = expand(points.spec_at(omega), 2)
    t0 = math.sqrt(2.0) * series.partial_sums[0]
    t2 = math.sqrt(2.0) * series.value
    return omega, t0, t2


def quartic_cubic_exact_period(
    a2: float, a3: float, a4: float, x_minus: float, x_plus: float
) -> float:
    """Exact period of the quartic-cubic potential by adaptive quadrature."""
    model = OscillatorModel.quartic_cubic(a2, a3, a4, x_minus, x_plus)
    points = turning_points(model)

    def integrand(theta: float) -> float:
        return 1.0 / math.sqrt(float(points.factor.evaluate(theta)))

    result = integrate(integrand, 0.0, math.pi, abs_tol=1e-13)
    return math.sqrt(2.0) * result.value


# ---------------------------------------------------------------------------
# Simple pendulum (V = 1 - cos x)
# ---------------------------------------------------------------------------


def pendulum_exact(amplitude: float) -> float:
    """Exact pendulum period 4 K(sin^2(A/2)) via the AGM oracle."""
    amplitude = float(amplitude)
    if not 0.0 < amplitude < math.pi:
        raise DomainError(
            f"pendulum amplitude must lie in (0, pi), got {amplitude!r}"
        )
    return 4.0 * elliptic_k(math.sin(0.5 * amplitude) ** 2)


def pendulum_approx(amplitude: float, taylor_order: int, series_order: int) -> float:
    """Pendulum period from a Taylor-truncated potential, expanded to order N.

    The potential 1 - cos(x) is truncated at x^taylor_order (2, 4 or 6), the
    factor polynomial is formed between the turning points +-A, and the
    generic expansion is summed through Delta-order series_order at the
    first-order stationary frequency.  Truncation at order 2 gives 2 pi for
    every amplitude; order 4 is the quartic family with mu = -1/6.
    """
    if series_order < 0:
        raise DomainError("series_order must be >= 0")
    model = OscillatorModel.pendulum(amplitude, taylor_order)
    points = turning_points(model)
    omega = pms_first_order(points.factor)
    return math.sqrt(2.0) * expand(points.spec_at(omega), series_order).value
