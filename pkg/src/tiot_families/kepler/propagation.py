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
from typing import Final

import numpy as np
from pdm_pfsc.logging import logger, traced_function
from scipy.integrate import solve_ivp

from ..core.abstractions import Matrix, Vector
from ..core.errors import PropagationError
from .dataclasses import CartesianState, GravModel, PropagatorSettings, Stm

DEFAULT_PROPAGATOR: Final[PropagatorSettings] = PropagatorSettings()

_UNIVERSAL_MAX_ITERATIONS: Final[int] = 100
_STUMPFF_SERIES_LIMIT: Final[float] = 0.1


def gravity_gradient(r: Vector, mu: float) -> Matrix:
    radius = float(np.linalg.norm(r))
    return (
        mu
        / radius**5
        * (3.0 * np.outer(r, r) - radius**2 * np.eye(3))
    )


def _two_body_with_stm(_: float, y: Vector, mu: float) -> Vector:
    r = y[:3]
    v = y[3:6]
    phi = y[6:].reshape(6, 6)

    radius = np.linalg.norm(r)
    acceleration = -mu * r / radius**3

    dynamics = np.zeros((6, 6))
    dynamics[:3, 3:] = np.eye(3)
    dynamics[3:, :3] = gravity_gradient(r, mu)

    return np.concatenate((v, acceleration, (dynamics @ phi).ravel()))


@traced_function
def propagate_with_stm(
    s0: CartesianState,
    dt: float,
    g: GravModel,
    settings: PropagatorSettings = DEFAULT_PROPAGATOR,
) -> tuple[CartesianState, Stm]:
    if dt < 0:
        raise ValueError(f"Elapsed time must be non-negative, got {dt}")
    if dt == 0:
        return s0, Stm.identity()

    y0 = np.concatenate((s0.r, s0.v, np.eye(6).ravel()))
    solution = solve_ivp(
        _two_body_with_stm,
        (0.0, dt),
        y0,
        method=settings.method,
        rtol=settings.rtol,
        atol=settings.atol,
        args=(g.mu,),
    )
    if not solution.success:
        logger.debug("Integrator failed after %s s: %s", dt, solution.message)
        raise PropagationError(
            f"State/STM propagation failed: {solution.message}"
        )

    y_final = solution.y[:, -1]
    return (
        CartesianState(y_final[:3], y_final[3:6]),
        Stm(y_final[6:].reshape(6, 6)),
    )


def _stumpff(z: float) -> tuple[float, float]:
    if abs(z) < _STUMPFF_SERIES_LIMIT:
        c_value, s_value = 0.0, 0.0
        term_c, term_s = 0.5, 1.0 / 6.0
        for k in range(12):
            c_value += term_c
            s_value += term_s
            term_c *= -z / ((2 * k + 3) * (2 * k + 4))
            term_s *= -z / ((2 * k + 4) * (2 * k + 5))
        return c_value, s_value
    if z > 0:
        root = math.sqrt(z)
        return (1.0 - math.cos(root)) / z, (root - math.sin(root)) / root**3
    root = math.sqrt(-z)
    return (math.cosh(root) - 1.0) / -z, (math.sinh(root) - root) / root**3


def _initial_universal_anomaly(
    s0: CartesianState, dt: float, alpha: float, mu: float
) -> float:
    sqrt_mu = math.sqrt(mu)
    if alpha > 1e-12:
        return sqrt_mu * dt * alpha
    if alpha < -1e-12:
        a = 1.0 / alpha
        rv = float(s0.r @ s0.v)
        argument = (
            -2.0
            * mu
            * alpha
            * dt
            / (rv + math.sqrt(-mu * a) * (1.0 - s0.radius * alpha))
        )
        if argument > 0:
            return math.sqrt(-a) * math.log(argument)
    return sqrt_mu * dt / s0.radius


def propagate_kepler(
    s0: CartesianState, dt: float, g: GravModel
) -> CartesianState:
    """Closed-form two-body propagation in universal variables."""
    mu = g.mu
    sqrt_mu = math.sqrt(mu)
    r0 = s0.radius
    rv = float(s0.r @ s0.v)
    alpha = 2.0 / r0 - float(s0.v @ s0.v) / mu

    if alpha > 1e-12:
        period = 2.0 * math.pi / (sqrt_mu * alpha**1.5)
        dt = math.fmod(dt, period)
    if dt == 0:
        return s0

    chi = _initial_universal_anomaly(s0, dt, alpha, mu)
    for _ in range(_UNIVERSAL_MAX_ITERATIONS):
        z = alpha * chi**2
        c_value, s_value = _stumpff(z)
        radius = (
            chi**2 * c_value
            + rv / sqrt_mu * chi * (1.0 - z * s_value)
            + r0 * (1.0 - z * c_value)
        )
        residual = (
            rv / sqrt_mu * chi**2 * c_value
            + (1.0 - alpha * r0) * chi**3 * s_value
            + r0 * chi
            - sqrt_mu * dt
        )
        step = residual / radius
        chi -= step
        if abs(step) <= 1e-14 * max(1.0, abs(chi)):
            break
    else:
        raise PropagationError("Universal-variable iteration did not converge")

    z = alpha * chi**2
    c_value, s_value = _stumpff(z)
    f = 1.0 - chi**2 / r0 * c_value
    g_coefficient = dt - chi**3 / sqrt_mu * s_value
    r = f * s0.r + g_coefficient * s0.v
    radius = float(np.linalg.norm(r))
    f_dot = sqrt_mu / (radius * r0) * chi * (z * s_value - 1.0)
    g_dot = 1.0 - chi**2 / radius * c_value
    return CartesianState(r, f_dot * s0.r + g_dot * s0.v)
