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

from pdm_pfsc.logging import logger

from ..core.errors import InvalidElementsError, KeplerConvergenceError
from .dataclasses import ClassicalElements, GravModel

KEPLER_MAX_ITERATIONS: Final[int] = 50
KEPLER_TOLERANCE: Final[float] = 1e-14

_TWO_PI: Final[float] = 2.0 * math.pi


def solve_kepler(m: float, e: float) -> float:
    """Eccentric anomaly for mean anomaly ``m``, in the same 2π branch."""
    if not 0.0 <= e < 1.0:
        raise InvalidElementsError(
            f"Eccentricity must lie in [0, 1), got {e}"
        )

    revolutions = math.floor(m / _TWO_PI)
    reduced = m - revolutions * _TWO_PI

    anomaly = reduced + e * math.sin(reduced)
    for _ in range(KEPLER_MAX_ITERATIONS):
        residual = anomaly - e * math.sin(anomaly) - reduced
        if abs(residual) <= KEPLER_TOLERANCE:
            return anomaly + revolutions * _TWO_PI
        anomaly -= residual / (1.0 - e * math.cos(anomaly))

    logger.error("Kepler iteration cap hit for m=%s, e=%s", m, e)
    raise KeplerConvergenceError(m, e)


def mean_from_eccentric(anomaly: float, e: float) -> float:
    return anomaly - e * math.sin(anomaly)


def mean_motion(el: ClassicalElements, g: GravModel) -> float:
    return math.sqrt(g.mu / el.a**3)


def orbital_period(el: ClassicalElements, g: GravModel) -> float:
    return _TWO_PI / mean_motion(el, g)


def wrap_angle(angle: float) -> float:
    return angle % _TWO_PI


def wrapped_difference(first: float, second: float) -> float:
    """Signed difference ``first - second`` mapped to [-π, π)."""
    return (first - second + math.pi) % _TWO_PI - math.pi
