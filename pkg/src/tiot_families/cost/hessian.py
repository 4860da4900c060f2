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
from typing import Final, Union

import numpy as np

from ..core.abstractions import Matrix, Vector
from .charts import chart_for
from .dataclasses import (
    DerivDomain,
    DesignPoint,
    HessianEval,
    ScenarioContext,
    StationaryClass,
)
from .evaluation import gradient
from .finite_difference import DEFAULT_STEP, central_difference, symmetrize

EIGENVALUE_TOLERANCE: Final[float] = 1e-10


def hessian_from_matrix(matrix: Matrix) -> HessianEval:
    symmetric, asymmetry = symmetrize(np.asarray(matrix, dtype=float))
    return HessianEval(
        matrix=symmetric,
        eigenvalues=np.linalg.eigvalsh(symmetric),
        asymmetry=asymmetry,
    )


def hessian_fd(
    x: DesignPoint,
    ctx: ScenarioContext,
    dom: DerivDomain,
    h: float = DEFAULT_STEP,
) -> HessianEval:
    """Central differences of the analytic domain gradient.

    The stencil moves along the domain chart's directions in scaled
    coordinates, so temporal steps shift both anomalies coherently.
    """
    basis = chart_for(ctx, dom, x.tof).basis()
    origin = x.scaled(ctx.time_scale)

    def _domain_gradient(z: Vector) -> Vector:
        return gradient(DesignPoint.from_scaled(z, ctx.time_scale), ctx, dom)

    raw = central_difference(_domain_gradient, origin, h, basis)
    return hessian_from_matrix(raw)


def classify_stationary(
    h: Union[HessianEval, Matrix], tol: float = EIGENVALUE_TOLERANCE
) -> StationaryClass:
    if isinstance(h, HessianEval):
        eigenvalues = h.eigenvalues
    else:
        matrix = np.asarray(h, dtype=float)
        eigenvalues = np.linalg.eigvalsh(0.5 * (matrix + matrix.T))

    if np.any(np.abs(eigenvalues) <= tol):
        return StationaryClass.DEGENERATE
    if np.all(eigenvalues > 0):
        return StationaryClass.MINIMUM
    if np.all(eigenvalues < 0):
        return StationaryClass.MAXIMUM
    return StationaryClass.SADDLE
