#
# SPDX-License-Identifier: MIT
#
# Copyright (c) 2024 The tiot-families authors.
#
# This file is part of tiot-families.
#
# This file is published using the MIT license.
# Refer to LICENSE for more information
#
import math

import numpy as np
import pytest

from tiot_families.core.errors import InvalidElementsError
from tiot_families.kepler import (
    CartesianState,
    ClassicalElements,
    GravModel,
    elements_to_state,
    mean_from_eccentric,
    mean_motion,
    orbit_normal,
    orbital_period,
    propagate_kepler,
    propagate_with_stm,
    solve_kepler,
    state_derivs_wrt_mean_anomaly,
    wrapped_difference,
)

EARTH = GravModel()
ORBIT = ClassicalElements.from_degrees(
    a=9000.0, e=0.3, i=25.0, raan=40.0, argp=70.0, m0=10.0
)


@pytest.mark.parametrize("e", [0.0, 0.1, 0.5, 0.9, 0.99])
@pytest.mark.parametrize("m", [0.0, 0.3, 2.0, math.pi, 5.5, -1.0])
def test_solve_kepler_satisfies_kepler_equation(e: float, m: float) -> None:
    anomaly = solve_kepler(m, e)
    residual = wrapped_difference(mean_from_eccentric(anomaly, e), m)
    assert abs(residual) < 1e-12


def test_solve_kepler_rejects_open_orbits() -> None:
    with pytest.raises(InvalidElementsError):
        solve_kepler(1.0, 1.0)


@pytest.mark.parametrize(
    "changes",
    [{"a": -1.0}, {"e": 1.0}, {"e": -0.1}, {"i": math.nan}],
)
def test_invalid_elements_are_rejected(changes: dict[str, float]) -> None:
    with pytest.raises(InvalidElementsError):
        ORBIT.with_changes(**changes)


def test_gravity_model_needs_positive_mu() -> None:
    with pytest.raises(InvalidElementsError):
        GravModel(mu=0.0)


def test_state_conserves_energy_and_momentum() -> None:
    energy = -EARTH.mu / (2.0 * ORBIT.a)
    momentum = math.sqrt(EARTH.mu * ORBIT.a * (1.0 - ORBIT.e**2))
    for m in np.linspace(0.0, 2.0 * math.pi, 13):
        state = elements_to_state(ORBIT, float(m), EARTH)
        assert state.energy(EARTH) == pytest.approx(energy, rel=1e-12)
        h = state.angular_momentum()
        assert np.linalg.norm(h) == pytest.approx(momentum, rel=1e-12)
        assert np.allclose(h / np.linalg.norm(h), orbit_normal(ORBIT))


def test_periapsis_radius() -> None:
    state = elements_to_state(ORBIT, 0.0, EARTH)
    assert state.radius == pytest.approx(ORBIT.a * (1.0 - ORBIT.e))


def test_state_derivatives_match_finite_differences() -> None:
    h = 1e-6
    for m in (0.2, 1.7, 3.5, 5.9):
        dr, dv = state_derivs_wrt_mean_anomaly(ORBIT, m, EARTH)
        ahead = elements_to_state(ORBIT, m + h, EARTH)
        behind = elements_to_state(ORBIT, m - h, EARTH)
        assert np.allclose(dr, (ahead.r - behind.r) / (2 * h), rtol=1e-6)
        assert np.allclose(dv, (ahead.v - behind.v) / (2 * h), rtol=1e-6)


def test_closed_form_propagation_matches_mean_motion() -> None:
    start = elements_to_state(ORBIT, 0.4, EARTH)
    for dt in (100.0, 2500.0, 12000.0, -800.0):
        moved = propagate_kepler(start, dt, EARTH)
        expected = elements_to_state(
            ORBIT, 0.4 + mean_motion(ORBIT, EARTH) * dt, EARTH
        )
        assert np.allclose(moved.r, expected.r, rtol=1e-10, atol=1e-7)
        assert np.allclose(moved.v, expected.v, rtol=1e-10, atol=1e-10)


def test_numerical_propagation_matches_closed_form() -> None:
    start = elements_to_state(ORBIT, 1.0, EARTH)
    dt = 0.8 * orbital_period(ORBIT, EARTH)
    numeric, _ = propagate_with_stm(start, dt, EARTH)
    exact = propagate_kepler(start, dt, EARTH)
    assert np.linalg.norm(numeric.r - exact.r) < 1e-8 * exact.radius


def test_zero_time_propagation_returns_identity() -> None:
    start = elements_to_state(ORBIT, 1.0, EARTH)
    state, stm = propagate_with_stm(start, 0.0, EARTH)
    assert state is start
    assert np.array_equal(stm.phi, np.eye(6))


def test_stm_is_symplectic_over_five_periods() -> None:
    start = elements_to_state(ORBIT, 0.0, EARTH)
    n = mean_motion(ORBIT, EARTH)
    duration = 5.0 * orbital_period(ORBIT, EARTH)
    _, stm = propagate_with_stm(start, duration, EARTH)
    assert stm.symplectic_defect(ORBIT.a, 1.0 / n) <= 1e-9


def test_stm_rv_block_matches_finite_differences() -> None:
    start = elements_to_state(ORBIT, 2.0, EARTH)
    dt = 0.6 * orbital_period(ORBIT, EARTH)
    _, stm = propagate_with_stm(start, dt, EARTH)
    h = 1e-6
    for k in range(3):
        step = np.zeros(3)
        step[k] = h
        ahead = propagate_kepler(
            CartesianState(start.r, start.v + step), dt, EARTH
        )
        behind = propagate_kepler(
            CartesianState(start.r, start.v - step), dt, EARTH
        )
        column = (ahead.r - behind.r) / (2.0 * h)
        assert np.linalg.norm(column - stm.rv[:, k]) <= 1e-5 * np.linalg.norm(
            column
        )


def test_wrapped_difference_is_shortest_signed_angle() -> None:
    assert wrapped_difference(0.1, 2.0 * math.pi - 0.1) == pytest.approx(0.2)
    assert wrapped_difference(2.0 * math.pi - 0.1, 0.1) == pytest.approx(-0.2)
