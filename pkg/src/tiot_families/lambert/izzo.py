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
"""Zero-revolution Lambert solver in the λ/x formulation.

The time-of-flight equation in ``x`` is solved with third-order Householder
steps, kept inside a shrinking bisection bracket. ``T(x)`` is strictly
decreasing on ``(-1, ∞)`` for the single-revolution case.
"""
import math
from typing import Final

import numpy as np
from pdm_pfsc.logging import logger, traced_function
from scipy.special import hyp2f1

from ..core.abstractions import Vector
from ..core.errors import CollinearGeometryError, LambertConvergenceError
from ..kepler.dataclasses import GravModel
from .dataclasses import BranchFlag, ConicKind, LambertSolution

COLLINEAR_TOLERANCE: Final[float] = 1e-10
TOF_TOLERANCE: Final[float] = 1e-12
MAX_ITERATIONS: Final[int] = 60
PARABOLIC_ENERGY_TOLERANCE: Final[float] = 1e-12

_SERIES_BAND: Final[tuple[float, float]] = (math.sqrt(0.6), math.sqrt(1.4))


def _sin_theta(r1: Vector, r2: Vector) -> tuple[float, float]:
    cross_norm = float(np.linalg.norm(np.cross(r1, r2)))
    radii = float(np.linalg.norm(r1) * np.linalg.norm(r2))
    if radii <= 0:
        raise ValueError("Endpoint position vectors must be non-zero")
    return cross_norm / radii, math.atan2(cross_norm, float(r1 @ r2))


def transfer_angle(r1: Vector, r2: Vector, d1: BranchFlag) -> float:
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    sin_theta, theta_short = _sin_theta(r1, r2)
    theta = theta_short
    if d1 is BranchFlag.LONG:
        theta = 2.0 * math.pi - theta_short
    if sin_theta < COLLINEAR_TOLERANCE:
        raise CollinearGeometryError(sin_theta, theta)
    return theta


def classify_conic(r: Vector, v: Vector, mu: float) -> ConicKind:
    potential = mu / float(np.linalg.norm(r))
    energy = float(v @ v) / 2.0 - potential
    if abs(energy) <= PARABOLIC_ENERGY_TOLERANCE * potential:
        return ConicKind.PARABOLIC
    return ConicKind.ELLIPTIC if energy < 0 else ConicKind.HYPERBOLIC


def _compute_y(x: float, lam: float) -> float:
    return math.sqrt(1.0 - lam**2 * (1.0 - x**2))


def _tof_equation(x: float, y: float, lam: float) -> float:
    if _SERIES_BAND[0] < x < _SERIES_BAND[1]:
        eta = y - lam * x
        s1 = (1.0 - lam - x * eta) * 0.5
        q = 4.0 / 3.0 * float(hyp2f1(3.0, 1.0, 2.5, s1))
        return (eta**3 * q + 4.0 * lam * eta) * 0.5

    if x < 1.0:
        psi = math.acos(max(-1.0, min(1.0, x * y + lam * (1.0 - x**2))))
    else:
        psi = math.asinh((y - x * lam) * math.sqrt(x**2 - 1.0))
    return (psi / math.sqrt(abs(1.0 - x**2)) - x + lam * y) / (1.0 - x**2)


def _tof_derivatives(
    x: float, y: float, tof: float, lam: float
) -> tuple[float, float, float]:
    one_minus = 1.0 - x**2
    if one_minus == 0.0:
        one_minus = math.ulp(1.0)
    first = (3.0 * tof * x - 2.0 + 2.0 * lam**3 * x / y) / one_minus
    second = (
        3.0 * tof + 5.0 * x * first + 2.0 * (1.0 - lam**2) * lam**3 / y**3
    ) / one_minus
    third = (
        7.0 * x * second
        + 8.0 * first
        - 6.0 * (1.0 - lam**2) * lam**5 * x / y**5
    ) / one_minus
    return first, second, third


def _initial_guess(tof: float, lam: float) -> float:
    t_00 = math.acos(lam) + lam * math.sqrt(1.0 - lam**2)
    t_1 = 2.0 / 3.0 * (1.0 - lam**3)
    if tof >= t_00:
        return (t_00 / tof) ** (2.0 / 3.0) - 1.0
    if tof < t_1:
        return 2.5 * t_1 / tof * (t_1 - tof) / (1.0 - lam**5) + 1.0
    return (t_00 / tof) ** math.log2(t_1 / t_00) - 1.0


def _solve_x(tof: float, lam: float) -> tuple[float, float, int]:
    x = _initial_guess(tof, lam)
    lower, upper = -1.0, math.inf
    tolerance = TOF_TOLERANCE * max(1.0, tof)

    for iteration in range(1, MAX_ITERATIONS + 1):
        y = _compute_y(x, lam)
        value = _tof_equation(x, y, lam)
        residual = value - tof
        if abs(residual) <= tolerance:
            return x, y, iteration

        if residual > 0:
            lower = max(lower, x)
        else:
            upper = min(upper, x)

        first, second, third = _tof_derivatives(x, y, value, lam)
        denominator = (
            first * (first**2 - residual * second)
            + third * residual**2 / 6.0
        )
        step = (
            residual * (first**2 - residual * second / 2.0) / denominator
        )
        candidate = x - step
        if not (math.isfinite(candidate) and lower < candidate < upper):
            if math.isfinite(upper):
                candidate = 0.5 * (lower + upper)
            else:
                candidate = x + max(1.0, abs(x))
            logger.debug(
                "Householder step rejected, bisecting to %s", candidate
            )

        if abs(candidate - x) <= 1e-15 * max(1.0, abs(x)):
            return candidate, _compute_y(candidate, lam), iteration
        x = candidate

    raise LambertConvergenceError(
        f"Lambert root-find did not converge within {MAX_ITERATIONS} "
        f"iterations (T={tof}, lambda={lam})"
    )


@traced_function
def solve_lambert(
    r1: Vector,
    r2: Vector,
    t: float,
    d1: BranchFlag,
    g: GravModel,
) -> LambertSolution:
    if not t > 0:
        raise ValueError(f"Time of flight must be positive, got {t}")
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    theta = transfer_angle(r1, r2, d1)

    r1_norm = float(np.linalg.norm(r1))
    r2_norm = float(np.linalg.norm(r2))
    chord = float(np.linalg.norm(r2 - r1))
    semi_perimeter = (r1_norm + r2_norm + chord) * 0.5

    i_r1 = r1 / r1_norm
    i_r2 = r2 / r2_norm
    i_h = np.cross(i_r1, i_r2)
    i_h /= np.linalg.norm(i_h)

    lam = math.sqrt(max(0.0, 1.0 - chord / semi_perimeter))
    if d1 is BranchFlag.SHORT:
        i_t1, i_t2 = np.cross(i_h, i_r1), np.cross(i_h, i_r2)
    else:
        lam = -lam
        i_t1, i_t2 = np.cross(i_r1, i_h), np.cross(i_r2, i_h)

    tof = math.sqrt(2.0 * g.mu / semi_perimeter**3) * t
    x, y, iterations = _solve_x(tof, lam)
    logger.debug("Lambert converged in %s iterations (x=%s)", iterations, x)

    gamma = math.sqrt(g.mu * semi_perimeter / 2.0)
    rho = (r1_norm - r2_norm) / chord
    sigma = math.sqrt(max(0.0, 1.0 - rho**2))

    v_r1 = gamma * ((lam * y - x) - rho * (lam * y + x)) / r1_norm
    v_r2 = -gamma * ((lam * y - x) + rho * (lam * y + x)) / r2_norm
    v_t1 = gamma * sigma * (y + lam * x) / r1_norm
    v_t2 = gamma * sigma * (y + lam * x) / r2_norm

    v1g = v_r1 * i_r1 + v_t1 * i_t1
    v2g = v_r2 * i_r2 + v_t2 * i_t2
    h = np.cross(r1, v1g)

    return LambertSolution(
        r1=r1,
        r2=r2,
        v1g=v1g,
        v2g=v2g,
        theta=theta,
        conic=classify_conic(r1, v1g, g.mu),
        d1=d1,
        tof=t,
        p=float(h @ h) / g.mu,
    )
