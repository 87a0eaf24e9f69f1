import math

import numpy as np
import pytest

from planar3b import wkb
from planar3b.errors import DomainError, NoTurningPointError
from planar3b.potentials import UnifiedPotential

U = UnifiedPotential()


# ------------------------------------------------------------- turning point

def test_turning_point_exact_inverse():
    assert wkb.turning_point(-math.exp(-2.0), U) == pytest.approx(math.e, rel=1e-12)


def test_turning_point_round_trip():
    E = U(1e3)
    assert wkb.turning_point(E, U) == pytest.approx(1e3, rel=1e-9)


def test_turning_point_threshold_cap():
    with pytest.raises(NoTurningPointError):
        wkb.turning_point(-1e-300, U, R_max=1e20)
    with pytest.raises(NoTurningPointError):
        wkb.turning_point(0.0, U)
    with pytest.raises(NoTurningPointError):
        # below the potential everywhere right of the probe radius
        wkb.turning_point(-1e6, U, R_lo=2.0)


# ------------------------------------------------------------- phases

def test_phase_at_turning_point_is_theta():
    cfg = wkb.WkbConfig(theta=0.4)
    E = U(50.0)
    r_e = wkb.turning_point(E, U)
    assert wkb.wkb_phase(r_e, E, U, cfg, nu0=100.0) == pytest.approx(0.4, abs=1e-9)


def test_phase_nu0_scaling():
    cfg = wkb.WkbConfig(theta=0.0)
    E = U(200.0)
    p1 = wkb.wkb_phase(5.0, E, U, cfg, nu0=50.0)
    p2 = wkb.wkb_phase(5.0, E, U, cfg, nu0=200.0)
    assert p2 / p1 == pytest.approx(2.0, rel=1e-9)


def test_phase_approx_closed_form():
    nu0, R, R_E = 500.0, 10.0, 1e4
    want = 2.0 * math.sqrt(nu0) * (math.sqrt(math.log(R_E)) - math.sqrt(math.log(R)))
    assert wkb.wkb_phase_approx(R, R_E, nu0, 0.0) == pytest.approx(want, rel=1e-14)
    assert wkb.wkb_phase_approx(1.0, R_E, nu0, 0.3) == pytest.approx(
        2.0 * math.sqrt(nu0) * math.sqrt(math.log(R_E)) + 0.3, rel=1e-14
    )
    assert wkb.wkb_phase_approx(R_E, R_E, nu0, 0.3) == 0.3
    with pytest.raises(DomainError):
        wkb.wkb_phase_approx(0.5, 10.0, nu0, 0.0)


def test_zero_energy_phase_matches_approx_within_phi():
    # E = 0 with a cap: phase equals the closed form exactly (no energy term)
    nu0, cfg = 500.0, wkb.WkbConfig()
    r, r_cap = 10.0, 1e5
    full = wkb.wkb_phase(r, 0.0, U, cfg, nu0=nu0, R_cap=r_cap)
    assert full == pytest.approx(wkb.wkb_phase_approx(r, r_cap, nu0, 0.0), abs=1e-8)
    with pytest.raises(DomainError):
        wkb.wkb_phase(r, 0.0, U, cfg, nu0=nu0)  # missing cap


# ------------------------------------------------------------- Phi correction

def test_phi_asymptotic_value():
    phi = wkb.phi_correction(2.0, 1e4, 500.0)
    assert phi * math.sqrt(1e4 / 500.0) == pytest.approx(1.0 - math.log(2.0), abs=1e-3)


def test_phi_positive_and_sqrt_convergent():
    vals = []
    for x_eps in (1e2, 1e3, 1e4):
        phi = wkb.phi_correction(1.0, x_eps, 100.0)
        assert phi > 0.0
        vals.append(phi * math.sqrt(x_eps / 100.0))
    target = 1.0 - math.log(2.0)
    devs = [abs(v - target) for v in vals]
    assert devs[1] < devs[0] and devs[2] < devs[1]


@pytest.mark.parametrize("x_eps", [1e2, 1e4])
def test_phi_chain_reconciles_full_and_approx(x_eps):
    nu0 = 500.0
    quad_tol = 1e-10
    for x in (2.0, 10.0, x_eps / 2.0):
        full = wkb.wkb_phase_langer(x, x_eps, nu0, U.langer_w, 0.0, quad_tol)
        approx = 2.0 * math.sqrt(nu0) * (math.sqrt(x_eps) - math.sqrt(x))
        phi = wkb.phi_correction(x, x_eps, nu0, quad_tol)
        assert abs(full - (approx - phi)) <= 2.0 * quad_tol


def test_phi_domain():
    with pytest.raises(DomainError):
        wkb.phi_correction(5.0, 5.0, 100.0)
    with pytest.raises(DomainError):
        wkb.phi_correction(-1.0, 5.0, 100.0)


# ------------------------------------------------------------- quantization

def test_quantize_closed_form_positions():
    nu0 = 500.0
    spec = wkb.quantize_spectrum((1, 10), nu0, wkb.WkbConfig())
    for n, rho, _ in spec.levels:
        assert rho == pytest.approx(math.exp(math.pi**2 * n**2 / (4 * nu0)), rel=1e-13)


def test_quantize_monotone_spectrum():
    spec = wkb.quantize_spectrum((1, 20), 300.0, wkb.WkbConfig())
    assert np.all(spec.E < 0)
    assert np.all(np.diff(spec.E) > 0)
    assert np.all(np.diff(spec.rho) > 0)


def test_quantize_slope_fit():
    nu0 = 500.0
    spec = wkb.quantize_spectrum((5, 25), nu0, wkb.WkbConfig())
    assert spec.slope_theory == pytest.approx(-math.pi**2 / (2 * nu0), rel=1e-15)
    assert spec.slope_fit == pytest.approx(spec.slope_theory, rel=1e-10)
    assert spec.E0_fit > 0


def test_quantize_ratio_law():
    nu0 = 500.0
    spec = wkb.quantize_spectrum((10, 20), nu0, wkb.WkbConfig())
    n, e = spec.n, spec.E
    ratios = e[1:] / e[:-1]
    law = np.exp(-math.pi**2 * (n[:-1] + 0.5) / nu0) * (n[:-1] / (n[:-1] + 1.0)) ** 2
    np.testing.assert_allclose(ratios, law, rtol=1e-12)


def test_theta_reindexing():
    # shifting theta by delta acts as n -> n - delta/pi in closed-form mode
    nu0, delta = 200.0, 0.5 * math.pi
    base = wkb.quantize_spectrum((2, 6), nu0, wkb.WkbConfig(theta=0.0))
    shifted = wkb.quantize_spectrum((2, 6), nu0, wkb.WkbConfig(theta=delta))
    for (n, rho_s, _) in shifted.levels:
        x_expect = (math.pi * (n - 0.5)) ** 2 / (4.0 * nu0)
        assert math.log(rho_s) == pytest.approx(x_expect, rel=1e-12)
    assert shifted.theta_used == delta
    assert len(base.levels) == len(shifted.levels)


def test_full_mode_exceeds_closed_form_by_phi_shift():
    # the energy term under the root shifts ln(rho_n) upward, approaching
    # 1 - ln 2 from below as n grows; the 5% closed-vs-full agreement the
    # asymptotic analysis might suggest does not hold at these n
    nu0 = 100.0
    full = wkb.quantize_spectrum((5, 12), nu0, wkb.WkbConfig(phase_mode="full"))
    closed = wkb.quantize_spectrum((5, 12), nu0, wkb.WkbConfig())
    gaps = [
        math.log(rf / rc)
        for (_, rf, _), (_, rc, _) in zip(full.levels, closed.levels)
    ]
    cap = 1.0 - math.log(2.0)
    assert all(0.0 < g < cap * 1.02 for g in gaps)
    assert all(b > a for a, b in zip(gaps, gaps[1:]))  # increasing toward the cap


def test_levels_beyond_rmax_are_dropped():
    cfg = wkb.WkbConfig(R_max=1e10)
    spec = wkb.quantize_spectrum((1, 200), 5.0, cfg)
    assert spec.levels, "some levels must survive"
    assert all(rho <= 1e10 for _, rho, _ in spec.levels)
    assert spec.levels[-1][0] < 200


# ------------------------------------------------------------- counting

def test_count_bound_states_value():
    nb = wkb.count_bound_states(100.0, 20.0)
    assert nb == pytest.approx(math.sqrt(40.0 * math.log(50.0)) / math.pi, rel=1e-14)
    assert nb == pytest.approx(3.98, abs=0.01)


def test_count_bound_states_scaling_and_divergence():
    nb = wkb.count_bound_states(100.0, 20.0)
    assert wkb.count_bound_states(100.0, 80.0) == pytest.approx(2.0 * nb, rel=1e-14)
    assert wkb.count_bound_states(1e8, 20.0) > wkb.count_bound_states(1e4, 20.0)
    with pytest.raises(DomainError):
        wkb.count_bound_states(2.0, 20.0)


def test_n_max():
    assert wkb.n_max(math.pi**2) == pytest.approx(1.0, rel=1e-14)
    assert wkb.n_max(1e5) == pytest.approx(1.013e4, rel=1e-3)
    assert wkb.n_max(2.0) == pytest.approx(0.2026, abs=1e-3)
    with pytest.raises(DomainError):
        wkb.n_max(0.0)


def test_config_validation():
    with pytest.raises(DomainError):
        wkb.WkbConfig(theta=4.0)
    with pytest.raises(DomainError):
        wkb.WkbConfig(R_inner=0.5)
    with pytest.raises(DomainError):
        wkb.WkbConfig(phase_mode="other")
