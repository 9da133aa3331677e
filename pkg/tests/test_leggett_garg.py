import math

import numpy as np
import pytest

from nu_lgi.dynamics import BlochVector
from nu_lgi.errors import InvalidArgumentError
from nu_lgi.generator import build_effective_generator
from nu_lgi.leggett_garg import (
    TimeTriple,
    correlation,
    correlators,
    delta_k3,
    k3,
    k3_pair,
    lgi_violated,
    phi_envelope,
    phi_grid,
)
from nu_lgi.model import KossakowskiCoefficients, OscillationParams


def make_params(**changes):
    base = dict(theta=0.187 * math.pi, dm2=7.54e-5, energy=1.0, v_cc=2.0, phi=0.0)
    base.update(changes)
    return OscillationParams(**base)


def make_coefficients(g=0.1, c12=None):
    return KossakowskiCoefficients.with_coupling(g, c12=c12)


def test_time_triple_validation():
    assert TimeTriple.from_spacing(0.1) == TimeTriple(0.0, 0.1, 0.2)
    for bad in ((0.0, 0.0, 1.0), (0.0, 2.0, 1.0), (-0.1, 0.0, 0.1), (0.0, 0.1, math.inf)):
        with pytest.raises(InvalidArgumentError):
            TimeTriple(*bad)
    with pytest.raises(InvalidArgumentError):
        TimeTriple.from_spacing(0.0)


def test_equal_time_correlation_is_one():
    g = build_effective_generator(make_params(), make_coefficients())
    assert correlation(g, BlochVector.sigma_z(), 0.0, 0.0) == 1.0
    with pytest.raises(InvalidArgumentError):
        correlation(g, BlochVector.sigma_z(), 0.2, 0.1)


def test_frozen_dynamics_sits_on_the_classical_bound():
    result = k3(np.zeros((4, 4)), BlochVector.sigma_z(), TimeTriple.from_spacing(0.3))
    assert result.k3 == 1.0
    assert not result.violated
    assert result.correlators.k3 == result.k3


def test_unitary_k3_closed_form():
    theta, v = 0.187 * math.pi, 3.0
    p = OscillationParams(theta=theta, dm2=0.0, energy=1.0, v_cc=v)
    g = build_effective_generator(p, KossakowskiCoefficients())
    cos_a2 = math.cos(2 * theta) ** 2
    for tau in np.linspace(0.05, 2.0, 20):
        expected = cos_a2 + (1 - cos_a2) * (2 * math.cos(v * tau) - math.cos(2 * v * tau))
        assert k3(g, BlochVector.sigma_z(), TimeTriple.from_spacing(tau)).k3 == pytest.approx(expected, abs=1e-12)


def test_k3_is_the_signed_correlator_sum():
    g = build_effective_generator(make_params(phi=1.1), make_coefficients())
    times = TimeTriple(0.05, 0.17, 0.4)
    c = correlators(g, BlochVector.sigma_z(), times)
    r = k3(g, BlochVector.sigma_z(), times)
    assert r.k3 == c.c21 + c.c32 - c.c31
    assert c.c21 == pytest.approx(correlation(g, BlochVector.sigma_z(), 0.05, 0.17), abs=1e-15)


def test_violation_slack():
    assert not lgi_violated(1.0)
    assert not lgi_violated(1.0 + 1e-13)
    assert lgi_violated(1.0 + 1e-9)
    assert not lgi_violated(-3.0)


def test_correlators_are_bounded_for_psd_dissipation():
    rng = np.random.default_rng(21)
    for _ in range(50):
        b = rng.uniform(-0.3, 0.3, size=(3, 3))
        k = KossakowskiCoefficients.from_matrix(b @ b.T, atol=1e-15)
        p = make_params(v_cc=rng.uniform(0, 10), phi=rng.uniform(0, 2 * math.pi))
        g = build_effective_generator(p, k)
        c = correlators(g, BlochVector.sigma_z(), TimeTriple.from_spacing(rng.uniform(0.01, 1.0)))
        assert all(abs(value) <= 1.0 + 1e-12 for value in (c.c21, c.c32, c.c31))


def test_dirac_pair_reuses_the_same_result():
    dirac, majorana = k3_pair(make_params(), make_coefficients(), TimeTriple.from_spacing(0.1))
    assert dirac is majorana
    assert delta_k3(make_params(), make_coefficients(), 0.1) == 0.0


def test_delta_k3_is_pi_periodic_without_c13_and_c23():
    k = make_coefficients(0.1)
    for phi in np.linspace(0.0, math.pi, 9):
        a = delta_k3(make_params(phi=phi), k, 0.1)
        b = delta_k3(make_params(phi=phi + math.pi), k, 0.1)
        assert a == pytest.approx(b, abs=1e-12)


def test_small_potential_law():
    g, v, tau, phi = 0.01, 0.1, 0.1, math.pi / 4
    p = make_params(v_cc=v, phi=phi)
    sin2 = math.sin(2 * p.theta) ** 2
    weight = (
        -(1 / 6) * math.exp(-4 * g * tau) + 1.5 * math.exp(-12 * g * tau) + (4 / 3) * math.exp(-8 * g * tau)
    ) / (8 / 3)
    expected = (16 / 3) * g * v**2 * sin2 * tau**3 * math.sin(2 * phi) * weight
    assert delta_k3(p, make_coefficients(g), tau) == pytest.approx(expected, rel=0.02)


def test_phase_grid():
    grid = phi_grid(4)
    assert grid == [0.0, math.pi / 2, math.pi, 3 * math.pi / 2]
    with pytest.raises(InvalidArgumentError):
        phi_grid(0)


def test_envelope_matches_explicit_grid_maximum():
    p, k, tau = make_params(), make_coefficients(), 0.1
    optimum = phi_envelope(p, k, tau, "abs_delta", count=16)
    values = [abs(delta_k3(p.with_phi(phi), k, tau)) for phi in phi_grid(16)]
    assert optimum.value == pytest.approx(max(values), abs=1e-15)
    assert optimum.phi == phi_grid(16)[int(np.argmax(values))]


def test_envelope_ties_resolve_to_the_smallest_phase():
    p, k = make_params(v_cc=0.0), make_coefficients()
    assert phi_envelope(p, k, 0.1, "abs_delta").phi == 0.0
    assert phi_envelope(p, k, 0.1, "k3").phi == 0.0
    with pytest.raises(InvalidArgumentError):
        phi_envelope(p, k, 0.1, "median")
