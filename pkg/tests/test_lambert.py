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

from tiot_families.core.errors import CollinearGeometryError
from tiot_families.kepler import CartesianState, GravModel, propagate_kepler
from tiot_families.lambert import (
    BranchFlag,
    ConicKind,
    parabolic_lambert,
    solve_lambert,
    transfer_angle,
)

EARTH = GravModel()
R1 = np.array([7000.0, 0.0, 0.0])


def _target(angle_deg: float, radius: float = 8000.0) -> np.ndarray:
    angle = math.radians(angle_deg)
    return radius * np.array([math.cos(angle), math.sin(angle), 0.15])


@pytest.mark.parametrize("d1", list(BranchFlag))
@pytest.mark.parametrize("angle", [30.0, 100.0, 170.0, 250.0])
@pytest.mark.parametrize("t", [600.0, 3000.0, 9000.0, 30000.0])
def test_lambert_arc_reaches_target(
    d1: BranchFlag, angle: float, t: float
) -> None:
    r2 = _target(angle)
    arc = solve_lambert(R1, r2, t, d1, EARTH)
    arrived = propagate_kepler(CartesianState(R1, arc.v1g), t, EARTH)
    assert np.linalg.norm(arrived.r - r2) < 1e-8 * np.linalg.norm(r2)
    assert np.allclose(arrived.v, arc.v2g, rtol=1e-7, atol=1e-9)
    assert arc.tof == t
    assert arc.d1 is d1


def test_branch_transfer_angles_are_complementary() -> None:
    r2 = _target(100.0)
    short = transfer_angle(R1, r2, BranchFlag.SHORT)
    long = transfer_angle(R1, r2, BranchFlag.LONG)
    assert 0.0 < short < math.pi < long < 2.0 * math.pi
    assert short + long == pytest.approx(2.0 * math.pi)


def test_branch_sets_direction_of_motion() -> None:
    r2 = _target(100.0)
    short = solve_lambert(R1, r2, 3000.0, BranchFlag.SHORT, EARTH)
    long = solve_lambert(R1, r2, 3000.0, BranchFlag.LONG, EARTH)
    assert float(short.arc_normal() @ long.arc_normal()) < 0.0


def test_collinear_endpoints_are_rejected() -> None:
    with pytest.raises(CollinearGeometryError):
        solve_lambert(R1, -2.0 * R1, 3000.0, BranchFlag.SHORT, EARTH)


def test_non_positive_time_is_rejected() -> None:
    with pytest.raises(ValueError):
        solve_lambert(R1, _target(60.0), 0.0, BranchFlag.SHORT, EARTH)


def test_semi_major_axis_of_elliptic_arc() -> None:
    arc = solve_lambert(R1, _target(60.0), 3000.0, BranchFlag.SHORT, EARTH)
    assert arc.conic is ConicKind.ELLIPTIC
    a = arc.semi_major_axis(EARTH.mu)
    assert a > 0
    energy = float(arc.v1g @ arc.v1g) / 2.0 - EARTH.mu / 7000.0
    assert energy == pytest.approx(-EARTH.mu / (2.0 * a))


@pytest.mark.parametrize("d1", list(BranchFlag))
def test_parabolic_arc_has_zero_energy(d1: BranchFlag) -> None:
    r2 = _target(100.0)
    arc = parabolic_lambert(R1, r2, d1, EARTH)
    assert arc.conic is ConicKind.PARABOLIC
    assert arc.is_parabolic_limit
    for r, v in ((R1, arc.v1g), (r2, arc.v2g)):
        potential = EARTH.mu / float(np.linalg.norm(r))
        energy = float(v @ v) / 2.0 - potential
        assert abs(energy) < 1e-10 * potential
    h = np.cross(R1, arc.v1g)
    assert float(h @ h) / EARTH.mu == pytest.approx(arc.p, rel=1e-10)


@pytest.mark.parametrize("d1", list(BranchFlag))
def test_long_flights_approach_the_parabolic_limit(d1: BranchFlag) -> None:
    r2 = _target(100.0)
    limit = parabolic_lambert(R1, r2, d1, EARTH)
    arc = solve_lambert(R1, r2, 1e10, d1, EARTH)
    assert np.allclose(arc.v1g, limit.v1g, rtol=1e-3, atol=1e-3)
    assert np.allclose(arc.v2g, limit.v2g, rtol=1e-3, atol=1e-3)
