"""Smoke tests for the python surface.

Deep numerical verification lives in the C++ suites; these checks confirm
the bindings round values through correctly and stay deterministic.
"""

import json
import math

import pytest

import cyclekit

MODULATED = json.dumps(
    {
        "model": "modulated_cycle",
        "a": 1.0,
        "lambda": math.pi / 6.0,
        "amplitude": {"ar": [0.5], "ma": [], "sigma": 0.3},
        "phase": {"type": "random_walk", "sigma": 0.2},
    }
)

CYCLE = json.dumps(
    {
        "model": "stochastic_cycle",
        "rho": 0.9,
        "lambda": math.pi / 6.0,
        "innovations": {"family": "gaussian", "sigma": 1.0},
    }
)


def test_icv_gaussian_closed_form():
    family = json.dumps({"family": "gaussian", "sigma": 1.0})
    assert cyclekit.icv(family) == pytest.approx(
        math.sqrt(math.pi / (4.0 - math.pi)), abs=1e-12
    )
    assert cyclekit.icv_numeric(family) == pytest.approx(cyclekit.icv(family), abs=1e-9)


def test_simulate_is_deterministic_and_typed():
    a = cyclekit.simulate(CYCLE, seed=17, n=64)
    b = cyclekit.simulate(CYCLE, seed=17, n=64)
    assert a == b
    assert len(a) == 64
    assert all(isinstance(v, float) for v in a)
    assert cyclekit.simulate(CYCLE, seed=18, n=64) != a


def test_spec_round_trip_and_tag():
    assert cyclekit.model_tag(MODULATED) == "modulated_cycle"
    normalized = cyclekit.normalize_spec(MODULATED)
    assert cyclekit.normalize_spec(normalized) == normalized
    with pytest.raises(ValueError):
        cyclekit.normalize_spec("{\"model\": \"unheard_of\"}")


def test_acf_matches_arma_building_block():
    got = cyclekit.theoretical_acf(CYCLE, 3)
    gamma3 = cyclekit.arma_acf([0.9], [], 1.0, 3)
    assert got == pytest.approx(gamma3 * math.cos(math.pi / 6.0 * 3), rel=1e-12)


def test_stationary_moment_variance_identity():
    # E y^2 = (a^2 + gamma_A(0)) / 2 for the integrated-phase model.
    gamma0 = cyclekit.arma_acf([0.5], [], 0.3, 0)
    assert cyclekit.stationary_moment(MODULATED, [0, 0]) == pytest.approx(
        (1.0 + gamma0) / 2.0, rel=1e-12
    )


def test_mc_moment_agrees_with_engine():
    engine = cyclekit.stationary_moment(MODULATED, [0, 1])
    mc = cyclekit.mc_product_moment(MODULATED, [0, 1], 0, 20000, seed=7, threads=4)
    assert abs(mc["mean"] - engine) < 4.0 * mc["std_error"]
    again = cyclekit.mc_product_moment(MODULATED, [0, 1], 0, 20000, seed=7, threads=1)
    assert again["mean"] == mc["mean"]  # thread count must not change the stream


def test_moment_functions_reject_wrong_model():
    with pytest.raises(ValueError):
        cyclekit.stationary_moment(CYCLE, [0, 0])


def test_empirical_icv_and_sampling():
    family = json.dumps({"family": "gaussian", "sigma": 2.0})
    draws = cyclekit.sample_amplitudes(family, 200000, seed=5)
    est = cyclekit.empirical_icv(draws)
    assert est["n"] == 200000
    target = math.sqrt(math.pi / (4.0 - math.pi))
    assert abs(est["value"] - target) < 4.0 * est["std_error"]


def test_empirical_acf_and_periodogram_shapes():
    path = cyclekit.simulate(CYCLE, seed=3, n=2048)
    acf = cyclekit.empirical_acf(path, 10)
    assert len(acf) == 11
    assert acf[0] > 0.0
    grid = [2.0 * math.pi * k / 2048 for k in range(1, 32)]
    psd = cyclekit.periodogram(path, grid)
    assert len(psd) == 31
    assert all(v >= 0.0 for v in psd)


def test_psi_weights_ar1():
    weights = cyclekit.psi_weights([0.5], [], 1.0, 6)
    assert weights == pytest.approx([0.5**k for k in range(7)], rel=1e-12)


def test_amplitude_pdf_normalizes():
    family = json.dumps({"family": "student_t", "nu": 6.0, "sigma": 1.0})
    xs = [i * 0.01 for i in range(4000)]
    mass = sum(cyclekit.amplitude_pdf(family, x) for x in xs) * 0.01
    assert mass == pytest.approx(1.0, abs=5e-3)


def test_apc_moment_mean_cycle():
    spec = json.dumps(
        {
            "model": "modulated_cycle",
            "a": 1.0,
            "lambda": math.pi / 5.0,
            "amplitude": None,
            "phase": {"type": "stationary", "ar": [0.6], "ma": [], "sigma": 0.25},
        }
    )
    lam = math.pi / 5.0
    var_p = 0.25**2 / (1.0 - 0.6**2)
    for t in (0, 1, 4):
        target = math.exp(-lam * lam * var_p / 2.0) * math.sin(lam * t)
        assert cyclekit.apc_moment(spec, [0], t) == pytest.approx(target, abs=1e-10)


def test_even_moments_arcsine_kurtosis():
    spec = json.dumps(
        {
            "model": "modulated_cycle",
            "a": 1.0,
            "lambda": math.pi / 6.0,
            "amplitude": None,
            "phase": {"type": "random_walk", "sigma": 0.2},
        }
    )
    moments = cyclekit.even_moment_and_kurtosis(spec)
    assert moments["second"] == pytest.approx(0.5, rel=1e-12)
    assert moments["kurtosis"] == pytest.approx(1.5, rel=1e-12)
