"""Core expansion machinery for turning-point integrals.

An integral I = int dx / sqrt(Q(x)) between simple zeros x- < x+ of Q is
rewritten against a harmonic reference Q0 = omega^2 (x - x-)(x+ - x).  The
substitution x = m + h cos(theta), with m the midpoint and h the half-width,
turns the ratio Delta = (Q - Q0)/Q0 into a polynomial in cos(theta), and the
binomial series of 1/sqrt(1 + Delta) turns I into a sum of exact trigonometric
moments.  The reference frequency omega is a free parameter; picking it so the
partial sum is stationary (equivalently, so the last retained term vanishes)
is what makes the truncated series accurate.

Everything in this module is exact-coefficient arithmetic on polynomials in
cos(theta): no numerical quadrature happens here.
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import (
    AlreadyBalanced,
    DomainError,
    NonPositiveMean,
    NoSignChange,
    OrderTooHigh,
    ToleranceNotMet,
)
from .oracle import find_root

__all__ = [
    "MAX_ORDER",
    "TrigPolynomial",
    "IntegrandSpec",
    "SeriesExpansion",
    "half_binomial",
    "cos_moment",
    "trig_multiply",
    "delta_of",
    "term",
    "expand",
    "pms_derivative_check",
    "pms_first_order",
    "pms_solve",
    "kappa_balance",
]

# Expansion orders beyond this are refused: the binomial weights and the
# polynomial degrees grow without buying accuracy at 64-bit precision.
MAX_ORDER = 64

_POSITIVITY_GRID = np.linspace(0.0, math.pi, 512)


@lru_cache(maxsize=None)
def half_binomial(n: int) -> float:
    """Generalized binomial coefficient (-1/2 choose n).

    Equals (-1)^n C(2n, n) / 4^n; computed as an exact rational and rounded
    once, so the value is correct to the last bit.
    """
    if n < 0:
        raise DomainError("half_binomial requires n >= 0")
    sign = -1 if n % 2 else 1
    return float(Fraction(sign * math.comb(2 * n, n), 4**n))


@lru_cache(maxsize=None)
def cos_moment(k: int) -> float:
    """Exact moment integral of cos^k(theta) over [0, pi].

    Zero for odd k by symmetry; pi * C(k, k/2) / 2^k for even k.
    """
    if k < 0:
        raise DomainError("cos_moment requires k >= 0")
    if k % 2:
        return 0.0
    return math.pi * float(Fraction(math.comb(k, k // 2), 2**k))


def _trimmed(coeffs: Sequence[float]) -> tuple[float, ...]:
    out = list(float(c) for c in coeffs)
    while len(out) > 1 and out[-1] == 0.0:
        out.pop()
    if not out:
        out = [0.0]
    return tuple(out)


@dataclass(frozen=True)
class TrigPolynomial:
    """Finite expansion sum_k c_k cos^k(theta), an even function of theta.

    Coefficients are stored in the monomial cos^k basis because factor
    functions of polynomial potentials arise there directly; use
    to_harmonics / from_harmonics to move to the cos(k theta) basis.
    Trailing zero coefficients are trimmed on construction, so the last
    stored coefficient is nonzero unless this is the zero polynomial.
    """

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Sequence[float]):
        object.__setattr__(self, "coeffs", _trimmed(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    def evaluate(self, theta):
        """Value at theta; accepts a scalar or an ndarray."""
        return np.polynomial.polynomial.polyval(np.cos(theta), self.coeffs)

    def integral(self) -> float:
        """Exact integral over [0, pi] via the cos^k moments."""
        return math.fsum(c * cos_moment(k) for k, c in enumerate(self.coeffs))

    def mean(self) -> float:
        """Average over [0, pi]."""
        return self.integral() / math.pi

    def __mul__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        return trig_multiply(self, other)

    def __add__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return TrigPolynomial(out)

    def scaled(self, factor: float) -> "TrigPolynomial":
        return TrigPolynomial([factor * c for c in self.coeffs])

    def shifted(self, constant: float) -> "TrigPolynomial":
        out = list(self.coeffs)
        out[0] += constant
        return TrigPolynomial(out)

    def to_harmonics(self) -> tuple[float, ...]:
        """Coefficients a_k of the equivalent sum_k a_k cos(k theta)."""
        return tuple(float(c) for c in np.polynomial.chebyshev.poly2cheb(self.coeffs))

    @classmethod
    def from_harmonics(cls, harmonics: Sequence[float]) -> "TrigPolynomial":
        """Build from coefficients of cos(k theta)."""
        return cls(np.polynomial.chebyshev.cheb2poly(list(harmonics)))


def trig_multiply(p: TrigPolynomial, q: TrigPolynomial) -> TrigPolynomial:
    """Product polynomial; plain coefficient convolution."""
    return TrigPolynomial(np.convolve(p.coeffs, q.coeffs))


@dataclass(frozen=True)
class IntegrandSpec:
    """One turning-point integral, ready for expansion.

    x_minus, x_plus: the simple zeros bracketing the motion.
    factor:          R(theta), the smooth factor of Q after the cosine
                     substitution, as a TrigPolynomial.
    omega:           reference frequency of the harmonic comparison term.
    regular:         when True (default) the factor is checked to be strictly
                     positive on a dense theta grid; pass False for integrals
                     that are knowingly evaluated outside that regime.
    """

    x_minus: float
    x_plus: float
    factor: TrigPolynomial
    omega: float
    regular: bool = field(default=True)

    def __post_init__(self):
        if not self.x_minus < self.x_plus:
            raise DomainError(
                f"turning points must satisfy x_minus < x_plus, "
                f"got ({self.x_minus!r}, {self.x_plus!r})"
            )
        if not self.omega > 0.0:
            raise DomainError(f"omega must be positive, got {self.omega!r}")
        if self.regular:
            values = self.factor.evaluate(_POSITIVITY_GRID)
            if not np.all(values > 0.0):
                raise DomainError(
                    "factor polynomial is not strictly positive on [0, pi]; "
                    "construct with regular=False to bypass"
                )

    @property
    def R(self) -> TrigPolynomial:
        """Alias for the factor polynomial."""
        return self.factor

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.x_minus + self.x_plus)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.x_plus - self.x_minus)

    def with_omega(self, omega: float) -> "IntegrandSpec":
        return IntegrandSpec(self.x_minus, self.x_plus, self.factor, omega, self.regular)


@dataclass(frozen=True)
class SeriesExpansion:
    """Terms I_0..I_N and compensated partial sums S_0..S_N at a fixed omega."""

    omega: float
    terms: tuple[float, ...]
    partial_sums: tuple[float, ...]

    @property
    def order(self) -> int:
        return len(self.terms) - 1

    @property
    def value(self) -> float:
        """Highest-order partial sum."""
        return self.partial_sums[-1]


def delta_of(spec: IntegrandSpec) -> TrigPolynomial:
    """Relative deviation Delta(theta) = factor/omega^2 - 1 from the reference."""
    return spec.factor.scaled(1.0 / spec.omega**2).shifted(-1.0)


def _moment_term(delta_power: TrigPolynomial, n: int, omega: float) -> float:
    return half_binomial(n) * delta_power.integral() / omega


def term(spec: IntegrandSpec, n: int) -> float:
    """n-th series term: (-1/2 choose n)/omega times the moment of Delta^n.

    Exact in the sense that the only roundoff is coefficient arithmetic;
    no quadrature is involved.  term(spec, 0) is pi/omega for every spec.
    """
    if n < 0:
        raise DomainError("term requires n >= 0")
    delta = delta_of(spec)
    power = TrigPolynomial([1.0])
    for _ in range(n):
        power = power * delta
    return _moment_term(power, n, spec.omega)


def _kahan_sums(terms: Sequence[float]) -> tuple[float, ...]:
    sums = []
    total = 0.0
    comp = 0.0
    for t in terms:
        y = t - comp
        s = total + y
        comp = (s - total) - y
        total = s
        sums.append(total)
    return tuple(sums)


def expand(spec: IntegrandSpec, order: int) -> SeriesExpansion:
    """All terms and partial sums through the requested order.

    Powers of Delta are built incrementally, so the cost is one polynomial
    multiply per order.  Orders above MAX_ORDER are refused.
    """
    if order < 0:
        raise DomainError("expansion order must be >= 0")
    if order > MAX_ORDER:
        raise OrderTooHigh(f"order {order} exceeds the cap of {MAX_ORDER}")
    delta = delta_of(spec)
    terms = []
    power = TrigPolynomial([1.0])
    for n in range(order + 1):
        terms.append(_moment_term(power, n, spec.omega))
        if n < order:
            power = power * delta
    return SeriesExpansion(
        omega=spec.omega, terms=tuple(terms), partial_sums=_kahan_sums(terms)
    )


def pms_derivative_check(spec: IntegrandSpec, order: int) -> float:
    """Analytic derivative of the order-N partial sum with respect to omega.

    Equals -(2N+1) I_N / omega, so stationarity of S_N in omega is the same
    statement as the vanishing of the last retained term.  Callers compare
    this against a finite difference of expand().
    """
    return -(2 * order + 1) * term(spec, order) / spec.omega


def pms_first_order(factor: TrigPolynomial) -> float:
    """Stationary reference frequency at first order.

    The first correction term vanishes exactly when omega^2 equals the
    theta-average of the factor polynomial, so the optimal omega is the
    square root of that mean.
    """
    mean = factor.mean()
    if mean <= 0.0:
        raise NonPositiveMean(
            f"factor mean {mean!r} is not positive; no real stationary frequency"
        )
    return math.sqrt(mean)


def _pms_abs_tol() -> float:
    raw = os.environ.get("PMS_ABS_TOL")
    if raw is None:
        return 1e-12
    try:
        value = float(raw)
    except ValueError as exc:
        raise DomainError(f"PMS_ABS_TOL must be a number, got {raw!r}") from exc
    if value <= 0.0:
        raise DomainError("PMS_ABS_TOL must be positive")
    return value


def pms_solve(
    spec_family: Callable[[float], IntegrandSpec],
    order: int,
    bracket: tuple[float, float],
) -> float:
    """Stationary omega at an odd order, found by bracketing I_N(omega) = 0.

    spec_family maps a candidate omega to the corresponding IntegrandSpec.
    The bracket must straddle a sign change of the order-N term.  The root
    is refined to machine-adjacent floats and then required to satisfy
    |I_N| < tol * pi/omega with tol = 1e-12 (override via the PMS_ABS_TOL
    environment variable).
    """
    if order < 0 or order % 2 == 0:
        raise DomainError(f"stationarity is solved at odd orders, got {order}")
    lo, hi = bracket
    if not 0.0 < lo < hi:
        raise DomainError(f"bracket must satisfy 0 < lo < hi, got {bracket!r}")

    def last_term(omega: float) -> float:
        return term(spec_family(omega), order)

    root = find_root(last_term, lo, hi, tol=0.0)
    residual = abs(last_term(root))
    ceiling = _pms_abs_tol() * math.pi / root
    if residual > ceiling:
        raise ToleranceNotMet(
            f"|I_{order}| = {residual:.3e} at omega = {root!r} exceeds {ceiling:.3e}"
        )
    return root


def _golden_max(f: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    """Maximum value of f on [lo, hi] by golden-section search."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return max(fc, fd)


_BALANCE_GRID = np.linspace(0.0, math.pi, 2048)


def _extrema(poly: TrigPolynomial) -> tuple[float, float]:
    """(max, min) of the polynomial over [0, pi]: dense grid plus local polish."""
    values = poly.evaluate(_BALANCE_GRID)
    step = _BALANCE_GRID[1]

    def polish(idx: int, sign: float) -> float:
        lo = max(_BALANCE_GRID[idx] - step, 0.0)
        hi = min(_BALANCE_GRID[idx] + step, math.pi)
        return sign * _golden_max(
            lambda th: sign * float(poly.evaluate(th)), lo, hi, 1e-12
        )

    hi_val = polish(int(np.argmax(values)), 1.0)
    lo_val = polish(int(np.argmin(values)), -1.0)
    return hi_val, lo_val


def kappa_balance(
    family: Callable[[float], TrigPolynomial],
    bracket: tuple[float, float],
    tol: float = 1e-12,
) -> float:
    """Parameter value at which the deviation polynomial is balanced.

    family maps kappa to Delta(theta; kappa); balanced means the maximum of
    Delta over [0, pi] equals minus its minimum, which keeps |Delta| < 1
    whenever either extremum does.  The imbalance max + min is driven to zero
    by bracketing.  If the family is balanced across the whole bracket
    (imbalance below tol at both ends), an AlreadyBalanced warning is issued
    and the bracket midpoint is returned.
    """

    def imbalance(kappa: float) -> float:
        hi, lo = _extrema(family(kappa))
        return hi + lo

    lo_k, hi_k = bracket
    f_lo, f_hi = imbalance(lo_k), imbalance(hi_k)
    if abs(f_lo) <= tol and abs(f_hi) <= tol:
        warnings.warn(
            "deviation polynomial is balanced for every kappa in the bracket",
            AlreadyBalanced,
            stacklevel=2,
        )
        return 0.5 * (lo_k + hi_k)
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise NoSignChange(
            f"imbalance has the same sign at both bracket ends: {f_lo!r}, {f_hi!r}"
        )
    return find_root(imbalance, lo_k, hi_k, tol=0.0)
