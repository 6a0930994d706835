"""Checks for the oscillator families against closed forms and the oracle."""

import math
import warnings

import numpy as np
import pytest

from pmsdelta.errors import (
    BarrierCrossed,
    DivergentExpansion,
    DomainError,
    NoPeriodicMotion,
)
from pmsdelta.oracle import elliptic_k
from pmsdelta.oscillators import (
    OscillatorModel,
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
    _sextic_weight,
)
from pmsdelta.series_core import expand, pms_first_order


def test_model_constructors_validate():
    with pytest.raises(DomainError):
        OscillatorModel.duffing(1.0, 0.0)
    with pytest.raises(DomainError):
        OscillatorModel.even_power(1, 1.0, 1.0)
    with pytest.raises(DomainError):
        OscillatorModel.cubic(1.0, 2.0)  # does not straddle the origin
    with pytest.raises(DomainError):
        OscillatorModel.quartic_cubic(0.5, 0.3, 0.1, -1.0, 1.0)  # unequal V
    with pytest.raises(DomainError):
        OscillatorModel.pendulum(1.0, 3)
    with pytest.raises(DomainError):
        OscillatorModel.pendulum(3.5, 4)


def test_turning_points_harmonic_duffing():
    pts = turning_points(OscillatorModel.duffing(0.0, 1.0))
    assert (pts.x_minus, pts.x_plus) == (-1.0, 1.0)
    assert pts.factor.coeffs == (0.5,)
    assert pts.rho == 0.0
    spec = pts.spec_at()
    assert spec.omega == pytest.approx(math.sqrt(0.5), rel=1e-15)


def test_turning_points_cubic_example():
    model = OscillatorModel.cubic(-1.0, 2.0)
    assert model.params["mu"] == pytest.approx(-0.5, rel=1e-15)
    assert model.energy == pytest.approx(2.0 / 3.0, rel=1e-15)
    pts = turning_points(model)
    assert math.isnan(pts.rho)
    # Stationary frequency of this configuration is exactly 1/2.
    assert pms_first_order(pts.factor) == pytest.approx(0.5, rel=1e-14)


def test_turning_points_rejections():
    with pytest.raises(NoPeriodicMotion):
        turning_points(OscillatorModel.duffing(-1.2, 1.0))
    with pytest.raises(BarrierCrossed):
        turning_points(OscillatorModel.cubic(-1.0, 10.0))


def test_quartic_cubic_embeds_duffing():
    pts_qc = turning_points(OscillatorModel.quartic_cubic(0.5, 0.0, 0.25, -1.0, 1.0))
    pts_d = turning_points(OscillatorModel.duffing(1.0, 1.0))
    assert pts_qc.factor.coeffs == pytest.approx(pts_d.factor.coeffs, rel=1e-15)


def test_duffing_omega_pms_values():
    assert duffing_omega_pms(0.0) == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-15)
    assert duffing_omega_pms(4.0) == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert duffing_omega_pms(-0.9) == pytest.approx(math.sqrt(1.3 / 8.0), rel=1e-15)
    with pytest.raises(NoPeriodicMotion):
        duffing_omega_pms(-1.0)


@pytest.mark.parametrize("rho", [0.5, 10.0, -0.9])
def test_duffing_series_converges_to_elliptic(rho):
    series = duffing_period_series(rho, 40)
    exact = duffing_exact_period(rho)
    print(f"rho={rho}: series {series:.12f} vs exact {exact:.12f}")
    assert series == pytest.approx(exact, rel=1e-10)


def test_duffing_series_harmonic():
    for order in (0, 1, 5):
        assert duffing_period_series(0.0, order) == pytest.approx(2.0 * math.pi, rel=1e-15)


def test_duffing_exact_basics():
    assert duffing_exact_period(0.0) == pytest.approx(2.0 * math.pi, rel=1e-14)
    assert duffing_exact_period(-0.9) > 2.0 * math.pi  # softening side
    with pytest.raises(DomainError):
        duffing_exact_period(-1.0)


def test_nayfeh_series_convergent_side():
    assert duffing_nayfeh_series(0.0, 5) == pytest.approx(2.0 * math.pi, rel=1e-15)
    assert duffing_nayfeh_series(1.0, 40) == pytest.approx(
        duffing_exact_period(1.0), rel=1e-8
    )


def test_nayfeh_series_diverges_where_ours_converges():
    rho = -0.8
    nayfeh = [duffing_nayfeh_series(rho, n) for n in range(26)]
    ours = [duffing_period_series(rho, n) for n in range(26)]
    nayfeh_steps = [abs(b - a) for a, b in zip(nayfeh, nayfeh[1:])]
    our_steps = [abs(b - a) for a, b in zip(ours, ours[1:])]
    # Increments of the comparison series grow beyond n = 10; ours shrink.
    assert all(b > a for a, b in zip(nayfeh_steps[10:20], nayfeh_steps[11:21]))
    assert our_steps[20] < our_steps[10] < our_steps[2]
    assert ours[25] == pytest.approx(duffing_exact_period(rho), rel=1e-6)


def test_duffing_b0():
    assert duffing_b0(0) == pytest.approx(math.sqrt(3.0) / 2.0, rel=1e-15)
    reference = 2.0 * math.pi / even_power_exact_period(2, math.inf)
    assert duffing_b0(25) == pytest.approx(reference, rel=1e-12)
    print(f"b0 limit: {duffing_b0(25):.15f} vs oracle {reference:.15f}")


@pytest.mark.parametrize("rho", [0.0, 0.5, 4.0, 100.0, -0.5, -0.9])
def test_virial_ratio_is_sqrt2(rho):
    omega_virial, ratio = virial_omega_check(rho)
    assert omega_virial == pytest.approx(math.sqrt(1.0 + 0.75 * rho), rel=1e-15)
    assert abs(ratio - math.sqrt(2.0)) < 1e-14


def test_sextic_wl_period():
    assert sextic_wl_period(0.0) == pytest.approx(2.0 * math.pi, rel=1e-14)
    assert sextic_wl_period(-0.9) == pytest.approx(10.62, abs=5e-3)
    # The published limit is quoted to five significant figures.
    rho = 1e10
    assert math.sqrt(rho) * sextic_wl_period(rho) == pytest.approx(8.4081, abs=5e-5)
    with pytest.raises(DomainError):
        sextic_wl_period(-1.0)


def test_sextic_t4():
    assert sextic_t4(0.0) == pytest.approx(2.0 * math.pi, rel=1e-13)
    assert sextic_t4(-0.9) == pytest.approx(10.67, abs=5e-3)
    rho = 1e10
    assert math.sqrt(rho) * sextic_t4(rho) == pytest.approx(8.41292, abs=2e-5)


def test_sextic_weights_table():
    expected = [1.0, 0.0, 32.5, 48.0, 1632.375, 5240.0, 95540.3125]
    got = [_sextic_weight(n) for n in range(7)]
    assert got == pytest.approx(expected, rel=1e-15)


def test_sextic_series_matches_t4_and_expansion():
    for rho in (-0.9, 0.5, 3.0):
        assert sextic_series(rho, 4) == pytest.approx(sextic_t4(rho), rel=1e-12)
    # Generic-engine cross-check at rho = 1.
    rho = 1.0
    pts = turning_points(OscillatorModel.sextic(rho, 1.0))
    spec = pts.spec_at()
    assert spec.omega == pytest.approx(math.sqrt(5.0 * rho + 8.0) / 4.0, rel=1e-15)
    for order in range(11):
        engine = math.sqrt(2.0) * expand(spec, order).value
        assert sextic_series(rho, order) == pytest.approx(engine, rel=1e-12), order
    assert sextic_series(0.0, 3) == pytest.approx(2.0 * math.pi, rel=1e-15)


def test_sextic_exact_period():
    assert sextic_exact_period(0.0) == pytest.approx(2.0 * math.pi, rel=1e-12)
    assert sextic_exact_period(-0.9) == pytest.approx(10.93467798, rel=1e-7)


def test_even_power_embeds_duffing():
    for rho in (0.5, 2.0):
        for pair_order in (0, 1, 3, 10):
            a = even_power_series(2, rho, 0.75, 2 * pair_order)
            b = duffing_period_series(rho, pair_order)
            assert a == pytest.approx(b, rel=1e-12)


def test_even_power_kappa_values():
    assert even_power_kappa_pms(2) == pytest.approx(0.75, rel=1e-15)
    assert even_power_kappa_pms(5) == pytest.approx(63.0 / 128.0, rel=1e-15)
    assert even_power_kappa_balanced(3) == pytest.approx(2.0 / 3.0, abs=1e-9)
    assert even_power_kappa_balanced(5) == pytest.approx(0.6, abs=1e-9)


def test_even_power_strong_coupling_k2_matches_elliptic():
    c0 = even_power_exact_period(2, math.inf)
    assert c0 == pytest.approx(4.0 * elliptic_k(0.5), rel=1e-11)


def test_even_power_k5_divergence_and_balance():
    kappa_pms = even_power_kappa_pms(5)
    with pytest.warns(DivergentExpansion):
        even_power_series(5, math.inf, kappa_pms, 6)
    kappa_b = even_power_kappa_balanced(5)
    c0_exact = even_power_exact_period(5, math.inf)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        errors = [
            abs(even_power_series(5, math.inf, kappa_b, order) - c0_exact)
            for order in range(1, 16)
        ]
    print(f"K=5 balanced c0 errors: first {errors[0]:.3e}, last {errors[-1]:.3e}")
    assert all(b < a for a, b in zip(errors, errors[1:]))
    assert errors[-1] < 1e-2 * c0_exact


def test_cubic_symmetric_is_harmonic():
    assert cubic_series(-1.0, 1.0, 0) == pytest.approx(2.0 * math.pi, rel=1e-14)
    assert cubic_series(-1.0, 1.0, 10) == pytest.approx(2.0 * math.pi, rel=1e-14)


def test_cubic_series_vs_oracle():
    series = cubic_series(-1.0, 1.05, 30)
    exact = cubic_exact_period(-1.0, 1.05)
    print(f"cubic (-1, 1.05): series {series:.12f} vs exact {exact:.12f}")
    assert series == pytest.approx(exact, rel=1e-10)


def test_cubic_rejections():
    with pytest.raises(BarrierCrossed):
        cubic_series(-1.0, 10.0, 4)
    with pytest.raises(DomainError):
        cubic_series(0.5, 1.0, 4)
    with pytest.raises(DomainError):
        cubic_series(-1.0, 1.0, -1)


def test_quartic_cubic_pms_improves_with_order():
    # Turning points of V = x^2/2 + 0.1 x^3 + 0.1 x^4 at E = 0.2.
    x_minus, x_plus = -0.6474066047756843, 0.5812792030865791
    omega, t0, t2 = quartic_cubic_pms(0.5, 0.1, 0.1, x_minus, x_plus)
    exact = quartic_cubic_exact_period(0.5, 0.1, 0.1, x_minus, x_plus)
    assert omega == pytest.approx(0.7398306531067346, rel=1e-12)
    err0 = abs(t0 - exact) / exact
    err2 = abs(t2 - exact) / exact
    print(f"quartic-cubic: T0 err {err0:.3e}, T2 err {err2:.3e}, exact {exact:.12f}")
    assert err2 < err0
    assert err2 < 1e-3


def test_quartic_cubic_embeds_cubic_frequency():
    model = OscillatorModel.cubic(-1.0, 1.05)
    mu = model.params["mu"]
    omega_qc, _, _ = quartic_cubic_pms(0.5, mu / 3.0, 0.0, -1.0, 1.05)
    omega_cubic = pms_first_order(turning_points(model).factor)
    assert omega_qc == pytest.approx(omega_cubic, rel=1e-14)


def test_pendulum_exact():
    assert pendulum_exact(1e-6) == pytest.approx(2.0 * math.pi, rel=1e-9)
    half_pi = pendulum_exact(math.pi / 2.0)
    assert half_pi == pytest.approx(4.0 * elliptic_k(0.5), rel=1e-15)
    amplitudes = np.linspace(0.1, 3.0, 12)
    periods = [pendulum_exact(a) for a in amplitudes]
    assert all(b > a for a, b in zip(periods, periods[1:]))
    with pytest.raises(DomainError):
        pendulum_exact(math.pi)
    with pytest.raises(DomainError):
        pendulum_exact(0.0)


def test_pendulum_taylor2_is_flat():
    for amplitude in (0.3, 1.0, 2.5):
        assert pendulum_approx(amplitude, 2, 4) == pytest.approx(
            2.0 * math.pi, rel=1e-14
        )


def test_pendulum_taylor4_leading_formula():
    got = pendulum_approx(1.0, 4, 0)
    assert got == pytest.approx(4.0 * math.sqrt(2.0) * math.pi / math.sqrt(7.0), rel=1e-14)
    for amplitude in (0.25, 0.5, 1.0):
        approx = pendulum_approx(amplitude, 4, 0)
        exact = pendulum_exact(amplitude)
        assert abs(approx - exact) / exact < 3e-3


def test_pendulum_taylor6_improves():
    for amplitude in (0.5, 1.0, 1.5, 2.0):
        exact = pendulum_exact(amplitude)
        err4 = abs(pendulum_approx(amplitude, 4, 0) - exact) / exact
        err6 = abs(pendulum_approx(amplitude, 6, 0) - exact) / exact
        assert err6 < err4, f"A={amplitude}"
    exact = pendulum_exact(2.0)
    err_leading = abs(pendulum_approx(2.0, 6, 0) - exact) / exact
    err_second = abs(pendulum_approx(2.0, 6, 2) - exact) / exact
    print(f"pendulum A=2: order-6 leading err {err_leading:.3e}, second {err_second:.3e}")
    assert err_second < err_leading


def test_pendulum_approx_rejections():
    with pytest.raises(DomainError):
        pendulum_approx(1.0, 3, 0)
    with pytest.raises(DomainError):
        pendulum_approx(3.3, 4, 0)
    with pytest.raises(DomainError):
        pendulum_approx(1.0, 4, -1)
