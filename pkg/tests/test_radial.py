import math

import numpy as np
import pytest

from planar3b import radial, wkb
from planar3b.errors import DomainError, StepSizeError
from planar3b.potentials import UnifiedPotential
from planar3b.specfun import bessel_j

U = UnifiedPotential()
NU0 = 4.0
R1_A1_100 = math.sqrt(50.0 * math.log(50.0))


def _exact_window(h, lo=0.5, hi=8.0, a=1.0, b=0.3):
    x = np.arange(lo, hi + h / 2, h)
    exact = radial.zero_energy_exact(x, NU0, a, b)
    return x, exact


# ------------------------------------------------------------- zero-energy exact

def test_zero_energy_first_node_pure_j():
    # A=1, B=0: first node where 2 sqrt(nu0 x) hits the first J1 zero
    j11 = 3.8317059702075125
    x_node = j11**2 / (4.0 * NU0)
    x = np.linspace(x_node * 0.2, x_node * 1.5, 4001)
    s = radial.zero_energy_exact(x, NU0, 1.0, 0.0)
    sign_flips = np.flatnonzero(s.values[:-1] * s.values[1:] < 0.0)
    assert len(sign_flips) == 1
    crossing = x[sign_flips[0]]
    assert crossing == pytest.approx(x_node, rel=1e-3)


def test_zero_energy_envelope_and_phase():
    # chi0 ~ x^(1/4) sin(2 sqrt(nu0 x) - theta0), theta0 = atan(B/A) + pi/4
    a_coef, b_coef = 1.0, 0.3
    theta0 = math.atan2(b_coef, a_coef) + math.pi / 4
    for x in (30.0, 60.0, 120.0):
        s = radial.zero_energy_exact(np.array([x, x + 1e-6]), NU0, a_coef, b_coef)
        amp = math.sqrt(2.0 / math.pi) / (4.0 * NU0 * x) ** 0.25 * math.hypot(a_coef, b_coef)
        envelope = s.values[0] / (x**0.25)
        assert abs(envelope) <= amp * (x**0.25) * 1.01  # bounded envelope
        want = math.sin(2.0 * math.sqrt(NU0 * x) - theta0)
        got = s.values[0] / (x**0.25 * amp * x**0.25)
        assert got == pytest.approx(want, abs=3.0 / math.sqrt(x))


def test_zero_energy_matches_specfun_value():
    s = radial.zero_energy_exact(np.array([1.0, 2.0]), NU0, 1.0, 0.0)
    assert s.values[0] == pytest.approx(bessel_j(1, 4.0), rel=1e-12)


def test_zero_energy_domain():
    with pytest.raises(DomainError):
        radial.zero_energy_exact(np.array([-1.0, 1.0]), NU0, 1.0, 0.0)


# ------------------------------------------------------------- Numerov

def test_numerov_vs_exact_rms():
    h = 1e-3
    x, exact = _exact_window(h)
    num = radial.numerov_integrate(U, 0.0, x, (exact.values[0], exact.values[1]), nu0=NU0)
    scale = np.dot(exact.values, num.values) / np.dot(num.values, num.values)
    rms = math.sqrt(np.mean((scale * num.values - exact.values) ** 2))
    assert rms <= 1e-6
    assert num.node_count == exact.node_count


def test_numerov_fourth_order_convergence():
    errs = []
    for h in (0.02, 0.01):
        x, exact = _exact_window(h)
        num = radial.numerov_integrate(U, 0.0, x, (exact.values[0], exact.values[1]), nu0=NU0)
        scale = np.dot(exact.values, num.values) / np.dot(num.values, num.values)
        errs.append(np.max(np.abs(scale * num.values - exact.values)))
    assert 12.0 <= errs[0] / errs[1] <= 20.0


class _ZeroPotential:
    def __call__(self, R):
        return 0.0

    @staticmethod
    def langer_w(x):
        return 0.0


@pytest.mark.parametrize("E, analytic", [
    (+1.0, lambda k, dx: math.sin(k * dx)),       # oscillatory
    (-1.0, lambda k, dx: math.sinh(k * dx)),      # exponential
])
def test_numerov_constant_coefficient_window(E, analytic):
    # V = 0 on a short window: eps e^(2x) is constant to O(2 dx), so the
    # solution matches the constant-coefficient form to ~dx^3
    nu0 = 4.0
    x0, h, n = 0.0, 2.5e-4, 5
    x = x0 + h * np.arange(n)
    k = math.sqrt(abs(nu0 * E))
    want = np.array([analytic(k, xx - x0) for xx in x])
    num = radial.numerov_integrate(_ZeroPotential(), E, x, (want[0], want[1]), nu0=nu0)
    assert np.max(np.abs(num.values - want)) < 1e-8


def test_numerov_step_rejection():
    x = np.linspace(0.01, 3.0, 30)  # far too coarse for nu0/x at the left edge
    with pytest.raises(StepSizeError):
        radial.numerov_integrate(U, 0.0, x, (0.0, 1e-3), nu0=400.0)


def test_numerov_nonuniform_grid_rejected():
    x = np.array([0.5, 0.6, 0.75, 0.9])
    with pytest.raises(DomainError):
        radial.numerov_integrate(U, 0.0, x, (0.0, 1e-3), nu0=NU0)


# ------------------------------------------------------------- eigenvalues

def test_harmonic_oscillator_self_test():
    res = radial.bound_states_1d(lambda x: x * x, (-6.0, 6.0), 4, h=2e-3)
    assert res.complete
    np.testing.assert_allclose(res.energies, [1.0, 3.0, 5.0, 7.0], atol=1e-6)
    spacings = np.diff(res.energies)
    np.testing.assert_allclose(spacings, 2.0, atol=1e-6)
    assert res.nodes == [0, 1, 2, 3]


def test_level_count_matches_counting_rule():
    # hard-wall window [r1, R1(a1=100)], nu0=20: zero-energy node count 4
    cnt = radial.count_negative_levels(U, 20.0, (1.0, R1_A1_100))
    nb = wkb.count_bound_states(100.0, 20.0)
    assert abs(cnt - round(nb)) <= 1
    res = radial.bound_states_numerov(U, 20.0, (1.0, R1_A1_100), cnt + 1, h=2e-4)
    assert not res.complete and len(res.energies) == cnt


def test_level_count_shifted_inner_wall():
    # moving the inner wall from r1 to e removes most of the phase integral;
    # the count drops to the node count of the zero-energy solution there
    cnt = radial.count_negative_levels(U, 20.0, (math.e, R1_A1_100))
    x_lo, x_hi = 1.0, math.log(R1_A1_100)
    phase = 2.0 * math.sqrt(20.0) * (math.sqrt(x_hi) - math.sqrt(x_lo))
    assert cnt in (math.floor(phase / math.pi), math.ceil(phase / math.pi))


def test_deepest_levels_against_wkb():
    nu0 = 100.0
    bs = radial.bound_states_numerov(U, nu0, (1.0, R1_A1_100), 3, h=2e-4)
    spec = wkb.quantize_spectrum((1, 3), nu0, wkb.WkbConfig(phase_mode="full"))
    assert bs.complete and len(spec.levels) == 3
    for e_num, (_, _, e_wkb) in zip(bs.energies, spec.levels):
        assert abs(e_wkb / e_num - 1.0) < 0.15


def test_eigenvalues_sorted_with_node_theorem():
    res = radial.bound_states_numerov(U, 30.0, (1.0, R1_A1_100), 3, h=2e-4)
    assert res.energies == sorted(res.energies)
    assert res.nodes == [0, 1, 2]


def test_outer_wall_independence():
    a = radial.bound_states_numerov(U, 20.0, (1.0, 8.0), 1, h=2e-4)
    b = radial.bound_states_numerov(U, 20.0, (1.0, 30.0), 1, h=2e-4)
    assert abs(a.energies[0] / b.energies[0] - 1.0) <= 1e-6


def test_window_validation():
    with pytest.raises(DomainError):
        radial.bound_states_numerov(U, 20.0, (0.5, 10.0), 1)
    with pytest.raises(DomainError):
        radial.bound_states_numerov(U, 20.0, (5.0, 5.0), 1)


def test_csv_writers(tmp_path):
    x = np.linspace(0.5, 2.0, 11)
    sample = radial.zero_energy_exact(x, NU0, 1.0, 0.0)
    wf_path = tmp_path / "chi.csv"
    radial.write_wavefunction_csv(sample, wf_path)
    lines = wf_path.read_text().splitlines()
    assert lines[0] == "x,chi" and len(lines) == 12
    assert float(lines[1].split(",")[0]) == 0.5

    states = radial.bound_states_1d(lambda t: t * t, (-6.0, 6.0), 2, h=2e-3)
    ev_path = tmp_path / "levels.csv"
    radial.write_eigenvalues_csv(states, ev_path)
    lines = ev_path.read_text().splitlines()
    assert lines[0] == "k,E_k,nodes"
    assert lines[1].split(",")[2] == "0" and lines[2].split(",")[2] == "1"
