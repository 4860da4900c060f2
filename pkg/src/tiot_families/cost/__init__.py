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
from .charts import AngularChart, DomainChart, TemporalChart, chart_for
from .dataclasses import (
    DEFAULT_TIME_SCALE,
    CostEval,
    DerivDomain,
    DesignPoint,
    HessianEval,
    ScenarioContext,
    StationaryClass,
    TofSensitivity,
    VelocitySensitivities,
)
from .evaluation import (
    DEGENERATE_BURN_THRESHOLD,
    arc_stm,
    burn_direction,
    evaluate_cost,
    evaluate_j,
    explicit_tof_sensitivity,
    gradient,
    lambert_velocity_sensitivities,
    rv_inverse,
    transfer_arc,
)
from .finite_difference import central_difference, symmetrize
from .hessian import classify_stationary, hessian_fd, hessian_from_matrix

__all__ = [
    "DEFAULT_TIME_SCALE",
    "DEGENERATE_BURN_THRESHOLD",
    CostEval.__name__,
    DerivDomain.__name__,
    DesignPoint.__name__,
    HessianEval.__name__,
    ScenarioContext.__name__,
    StationaryClass.__name__,
    TofSensitivity.__name__,
    VelocitySensitivities.__name__,
    DomainChart.__name__,
    AngularChart.__name__,
    TemporalChart.__name__,
    chart_for.__name__,
    evaluate_cost.__name__,
    evaluate_j.__name__,
    transfer_arc.__name__,
    arc_stm.__name__,
    rv_inverse.__name__,
    burn_direction.__name__,
    lambert_velocity_sensitivities.__name__,
    explicit_tof_sensitivity.__name__,
    gradient.__name__,
    hessian_fd.__name__,
    hessian_from_matrix.__name__,
    classify_stationary.__name__,
    central_difference.__name__,
    symmetrize.__name__,
]
