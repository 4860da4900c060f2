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

from ..core.abstractions import Vector
from ..core.errors import NoParabolicConnectionError
from ..kepler.dataclasses import GravModel
from .dataclasses import BranchFlag, ConicKind, LambertSolution
from .izzo import transfer_angle

RATIO_SLACK: Final[float] = 1e-12


def _wrap_pi(angle: float) -> float:
    return (angle + math.pi) % (2.0 * math.pi) - math.pi


def parabolic_lambert(
    r1: Vector, r2: Vector, d1: BranchFlag, g: GravModel
) -> LambertSolution:
    """Limit arc for t → ∞: the parabola through both endpoints that
    passes through infinity (f = π) between them."""
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    theta = transfer_angle(r1, r2, d1)
    r1_norm = float(np.linalg.norm(r1))
    r2_norm = float(np.linalg.norm(r2))

    a_term = r1_norm - r2_norm * math.cos(theta)
    b_term = r2_norm * math.sin(theta)
    c_term = r2_norm - r1_norm
    ratio = c_term / math.hypot(a_term, b_term)
    if abs(ratio) > 1.0 + RATIO_SLACK:
        raise NoParabolicConnectionError(
            f"No parabola joins the endpoints (ratio={ratio})"
        )

    delta = math.atan2(b_term, a_term)
    f1 = _wrap_pi(delta + math.acos(max(-1.0, min(1.0, ratio))))
    if not f1 + theta > math.pi:
        raise NoParabolicConnectionError(
            f"Parabolic branch misses f = pi (f1={f1}, theta={theta})"
        )
    f2 = f1 + theta
    p = r1_norm * (1.0 + math.cos(f1))

    i_h = np.cross(r1, r2)
    i_h /= np.linalg.norm(i_h)
    if d1 is BranchFlag.LONG:
        i_h = -i_h

    speed_scale = math.sqrt(g.mu / p)

    def _velocity(r: Vector, anomaly: float) -> Vector:
        i_r = r / np.linalg.norm(r)
        i_t = np.cross(i_h, i_r)
        return speed_scale * (
            math.sin(anomaly) * i_r + (1.0 + math.cos(anomaly)) * i_t
        )

    return LambertSolution(
        r1=r1,
        r2=r2,
        v1g=_velocity(r1, f1),
        v2g=_velocity(r2, f2),
        theta=theta,
        conic=ConicKind.PARABOLIC,
        d1=d1,
        p=p,
    )
