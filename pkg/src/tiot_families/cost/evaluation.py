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
"""Two-impulse cost and its first derivatives.

Velocity sensitivities of the Lambert arc follow from the blocks of the
arc's state transition matrix; the explicit time-of-flight sensitivity
holds both endpoint positions fixed. All time derivatives are reported per
scaled time unit (``ctx.time_scale`` seconds).
"""
from typing import Final

import numpy as np
from pdm_pfsc.logging import logger
from scipy.linalg import svd

from ..core.abstractions import Matrix, Vector
from ..core.errors import DegenerateBurnError, SingularSensitivityError
from ..kepler import (
    CartesianState,
    Stm,
    propagate_with_stm,
    state_derivs_wrt_mean_anomaly,
)
from ..lambert import LambertSolution, solve_lambert
from .dataclasses import (
    CostEval,
    DerivDomain,
    DesignPoint,
    ScenarioContext,
    TofSensitivity,
    VelocitySensitivities,
)

DEGENERATE_BURN_THRESHOLD: Final[float] = 1e-12
CONDITION_LIMIT: Final[float] = 1e12


def burn_direction(dv: Vector) -> Vector:
    magnitude = float(np.linalg.norm(dv))
    if magnitude < DEGENERATE_BURN_THRESHOLD:
        raise DegenerateBurnError(magnitude)
    return dv / magnitude


def _endpoints(
    x: DesignPoint, ctx: ScenarioContext
) -> tuple[CartesianState, CartesianState]:
    return ctx.departure_state(x.m1), ctx.arrival_state(x.m2)


def transfer_arc(x: DesignPoint, ctx: ScenarioContext) -> LambertSolution:
    departure, arrival = _endpoints(x, ctx)
    return solve_lambert(departure.r, arrival.r, x.tof, ctx.d1, ctx.g)


def evaluate_j(x: DesignPoint, ctx: ScenarioContext) -> float:
    departure, arrival = _endpoints(x, ctx)
    arc = solve_lambert(departure.r, arrival.r, x.tof, ctx.d1, ctx.g)
    return float(
        np.linalg.norm(arc.v1g - departure.v)
        + np.linalg.norm(arrival.v - arc.v2g)
    )


def rv_inverse(stm: Stm, theta: float) -> Matrix:
    left, singular, right = svd(stm.rv)
    condition = singular[0] / singular[-1] if singular[-1] > 0 else np.inf
    if condition > CONDITION_LIMIT:
        logger.debug(
            "phi_rv condition number %s near theta=%s", condition, theta
        )
        raise SingularSensitivityError(float(condition), theta)
    return (right.T / singular) @ left.T


def arc_stm(arc: LambertSolution, ctx: ScenarioContext) -> Stm:
    _, stm = propagate_with_stm(
        CartesianState(arc.r1, arc.v1g), arc.tof, ctx.g, ctx.propagator
    )
    return stm


class _ArcSensitivity:
    def __init__(self, arc: LambertSolution, ctx: ScenarioContext) -> None:
        self.__arc = arc
        self.__ctx = ctx
        self.__stm = arc_stm(arc, ctx)
        self.__rv_inverse = rv_inverse(self.__stm, arc.theta)

    def velocities(self) -> VelocitySensitivities:
        stm, inverse = self.__stm, self.__rv_inverse
        return VelocitySensitivities(
            dv1_dr1=-inverse @ stm.rr,
            dv1_dr2=inverse,
            dv2_dr1=stm.vr - stm.vv @ inverse @ stm.rr,
            dv2_dr2=stm.vv @ inverse,
            stm=stm,
        )

    def explicit_tof(self, u1: Vector, u2: Vector) -> TofSensitivity:
        arc, mu = self.__arc, self.__ctx.g.mu
        r2 = arc.r2
        gravity = -mu * r2 / float(np.linalg.norm(r2)) ** 3
        dv1g = -self.__rv_inverse @ arc.v2g
        dv2g = self.__stm.vv @ dv1g + gravity
        scale = self.__ctx.time_scale
        return TofSensitivity(
            dv1g_dt=dv1g * scale,
            dv2g_dt=dv2g * scale,
            djdt=float(u1 @ dv1g - u2 @ dv2g) * scale,
        )


def lambert_velocity_sensitivities(
    x: DesignPoint, ctx: ScenarioContext
) -> VelocitySensitivities:
    return _ArcSensitivity(transfer_arc(x, ctx), ctx).velocities()


def explicit_tof_sensitivity(
    x: DesignPoint, ctx: ScenarioContext
) -> TofSensitivity:
    departure, arrival = _endpoints(x, ctx)
    arc = solve_lambert(departure.r, arrival.r, x.tof, ctx.d1, ctx.g)
    u1 = burn_direction(arc.v1g - departure.v)
    u2 = burn_direction(arrival.v - arc.v2g)
    return _ArcSensitivity(arc, ctx).explicit_tof(u1, u2)


def evaluate_cost(x: DesignPoint, ctx: ScenarioContext) -> CostEval:
    departure, arrival = _endpoints(x, ctx)
    arc = solve_lambert(departure.r, arrival.r, x.tof, ctx.d1, ctx.g)
    dv1 = arc.v1g - departure.v
    dv2 = arrival.v - arc.v2g
    u1 = burn_direction(dv1)
    u2 = burn_direction(dv2)

    sensitivity = _ArcSensitivity(arc, ctx)
    blocks = sensitivity.velocities()
    dr1, dv1_dm = state_derivs_wrt_mean_anomaly(ctx.dep, x.m1, ctx.g)
    dr2, dv2_dm = state_derivs_wrt_mean_anomaly(ctx.arr, x.m2, ctx.g)

    djdm1 = float(
        u1 @ (blocks.dv1_dr1 @ dr1 - dv1_dm) - u2 @ (blocks.dv2_dr1 @ dr1)
    )
    djdm2 = float(
        u1 @ (blocks.dv1_dr2 @ dr2) + u2 @ (dv2_dm - blocks.dv2_dr2 @ dr2)
    )
    explicit = sensitivity.explicit_tof(u1, u2).djdt
    scale = ctx.time_scale

    return CostEval(
        j=float(np.linalg.norm(dv1) + np.linalg.norm(dv2)),
        dv1=dv1,
        dv2=dv2,
        djdm1=djdm1,
        djdm2=djdm2,
        djdtof_explicit=explicit,
        djdT=scale * (ctx.n1 * djdm1 + ctx.n2 * djdm2),
        djdt_total=scale * ctx.n2 * djdm2 + explicit,
        arc=arc,
    )


def gradient(
    x: DesignPoint, ctx: ScenarioContext, dom: DerivDomain
) -> Vector:
    cost = evaluate_cost(x, ctx)
    if dom is DerivDomain.ANGULAR:
        return cost.angular_gradient()
    return cost.temporal_gradient()
