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

from ..core.abstractions import Matrix, Vector
from .anomaly import solve_kepler
from .dataclasses import CartesianState, ClassicalElements, GravModel


def rotation_matrix(el: ClassicalElements) -> Matrix:
    """Perifocal to inertial rotation (3-1-3 sequence Ω, i, ω)."""
    c_o, s_o = math.cos(el.raan), math.sin(el.raan)
    c_i, s_i = math.cos(el.i), math.sin(el.i)
    c_w, s_w = math.cos(el.argp), math.sin(el.argp)
    return np.array(
        [
            [
                c_o * c_w - s_o * s_w * c_i,
                -c_o * s_w - s_o * c_w * c_i,
                s_o * s_i,
            ],
            [
                s_o * c_w + c_o * s_w * c_i,
                -s_o * s_w + c_o * c_w * c_i,
                -c_o * s_i,
            ],
            [s_w * s_i, c_w * s_i, c_i],
        ]
    )


def orbit_normal(el: ClassicalElements) -> Vector:
    return rotation_matrix(el)[:, 2]


def periapsis_direction(el: ClassicalElements) -> Vector:
    return rotation_matrix(el)[:, 0]


def _perifocal_terms(
    el: ClassicalElements, m: float, g: GravModel
) -> tuple[float, float, float, float, float]:
    anomaly = solve_kepler(m, el.e)
    cos_e, sin_e = math.cos(anomaly), math.sin(anomaly)
    radius = el.a * (1.0 - el.e * cos_e)
    return (
        cos_e,
        sin_e,
        radius,
        math.sqrt(1.0 - el.e**2),
        math.sqrt(g.mu * el.a),
    )


def elements_to_state(
    el: ClassicalElements, m: float, g: GravModel
) -> CartesianState:
    cos_e, sin_e, radius, beta, root_mu_a = _perifocal_terms(el, m, g)
    r_pqw = el.a * np.array([cos_e - el.e, beta * sin_e, 0.0])
    v_pqw = root_mu_a / radius * np.array([-sin_e, beta * cos_e, 0.0])
    rotation = rotation_matrix(el)
    return CartesianState(rotation @ r_pqw, rotation @ v_pqw)


def state_derivs_wrt_mean_anomaly(
    el: ClassicalElements, m: float, g: GravModel
) -> tuple[Vector, Vector]:
    cos_e, sin_e, radius, beta, root_mu_a = _perifocal_terms(el, m, g)
    de_dm = 1.0 / (1.0 - el.e * cos_e)

    dr_pqw = el.a * de_dm * np.array([-sin_e, beta * cos_e, 0.0])
    # d(1/r)/dE = -a e sin(E) / r^2
    dv_pqw = de_dm * (
        -el.a
        * root_mu_a
        * el.e
        * sin_e
        / radius**2
        * np.array([-sin_e, beta * cos_e, 0.0])
        + root_mu_a / radius * np.array([-cos_e, -beta * sin_e, 0.0])
    )
    rotation = rotation_matrix(el)
    return rotation @ dr_pqw, rotation @ dv_pqw
