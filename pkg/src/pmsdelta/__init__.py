"""Periods and orbital precession from an optimized series expansion.

The package evaluates turning-point integrals of the form
integral dx / sqrt(Q(x)) by factoring out a harmonic reference between the
turning points and expanding the remainder, with the reference frequency
fixed by a stationarity condition on the partial sum.  Applications cover
anharmonic oscillator periods and the perihelion advance of nearly circular
relativistic orbits, each checked against an independent adaptive-quadrature
oracle.
"""

from .analysis import (
    ConvergenceStudy,
    StudyPoint,
    duffing_b0_study,
    duffing_error_vs_rho,
    negative_rho_study,
    precession_error_table,
    sextic_c0_study,
)
from .constants import (
    DEFAULT_ECCENTRICITY,
    DEFAULT_GM,
    REFERENCE,
    ReferenceConstants,
    ReferenceValue,
)
from .errors import (
    AlreadyBalanced,
    BarrierCrossed,
    BeyondCritical,
    DegenerateFit,
    DivergentExpansion,
    DomainError,
    NoPeriodicMotion,
    NoSignChange,
    NonFiniteIntegrand,
    NonPositiveMean,
    OrderTooHigh,
    PmsDeltaError,
    ThirdRootInsideInterval,
    ToleranceNotMet,
)
from .oracle import (
    FitResult,
    QuadratureResult,
    elliptic_k,
    find_root,
    fit_log_linear,
    integrate,
)
from .oscillators import (
    OscillatorModel,
    TurningPoints,
    cubic_exact_period,
    cubic_series,
    duffing_b0,
    duffing_exact_period,
    duffing_nayfeh_series,
    duffing_omega_pms,
    duffing_period_series,
    even_power_exact_period,
    even_power_kappa_balanced,
    even_power_kappa_pms,
    even_power_series,
    pendulum_approx,
    pendulum_exact,
    quartic_cubic_exact_period,
    quartic_cubic_pms,
    sextic_exact_period,
    sextic_series,
    sextic_t4,
    sextic_wl_period,
    turning_points,
    virial_omega_check,
)
from .precession import (
    OrbitParams,
    critical_semimajor_axis,
    precession_exact,
    precession_series,
)
from .series_core import (
    MAX_ORDER,
    IntegrandSpec,
    SeriesExpansion,
    TrigPolynomial,
    cos_moment,
    delta_of,
    expand,
    half_binomial,
    kappa_balance,
    pms_derivative_check,
    pms_first_order,
    pms_solve,
    term,
    trig_multiply,
)

__version__ = "0.1.0"

__all__ = [
    "AlreadyBalanced",
    "BarrierCrossed",
    "BeyondCritical",
    "ConvergenceStudy",
    "DEFAULT_ECCENTRICITY",
    "DEFAULT_GM",
    "DegenerateFit",
    "DivergentExpansion",
    "DomainError",
    "FitResult",
    "IntegrandSpec",
    "MAX_ORDER",
    "NoPeriodicMotion",
    "NoSignChange",
    "NonFiniteIntegrand",
    "NonPositiveMean",
    "OrbitParams",
    "OrderTooHigh",
    "OscillatorModel",
    "PmsDeltaError",
    "QuadratureResult",
    "REFERENCE",
    "ReferenceConstants",
    "ReferenceValue",
    "SeriesExpansion",
    "StudyPoint",
    "ThirdRootInsideInterval",
    "ToleranceNotMet",
    "TrigPolynomial",
    "TurningPoints",
    "cos_moment",
    "critical_semimajor_axis",
    "cubic_exact_period",
    "cubic_series",
    "delta_of",
    "duffing_b0",
    "duffing_b0_study",
    "duffing_error_vs_rho",
    "duffing_exact_period",
    "duffing_nayfeh_series",
    "duffing_omega_pms",
    "duffing_period_series",
    "elliptic_k",
    "even_power_exact_period",
    "even_power_kappa_balanced",
    "even_power_kappa_pms",
    "even_power_series",
    "expand",
    "find_root",
    "fit_log_linear",
    "half_binomial",
    "integrate",
    "kappa_balance",
    "negative_rho_study",
    "pendulum_approx",
    "pendulum_exact",
    "pms_derivative_check",
    "pms_first_order",
    "pms_solve",
    "precession_error_table",
    "precession_exact",
    "precession_series",
    "quartic_cubic_exact_period",
    "quartic_cubic_pms",
    "sextic_c0_study",
    "sextic_exact_period",
    "sextic_series",
    "sextic_t4",
    "sextic_wl_period",
    "term",
    "trig_multiply",
    "turning_points",
    "virial_omega_check",
]
