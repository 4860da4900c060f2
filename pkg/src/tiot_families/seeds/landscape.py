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
"""Stationary points of a two-coordinate gradient field on a grid.

Every cell whose four corners bracket a sign change of both gradient
components starts a Newton solve from its center. Converged points are
wrapped, deduplicated and classified by their finite-difference Hessian.
"""
from collections.abc import Callable
from typing import Final, Optional

import numpy as np
from pdm_pfsc.logging import logger

from ..core.abstractions import Matrix, Vector
from ..core.concurrency import map_ordered
from ..core.errors import TiotError
from ..cost import (
    HessianEval,
    StationaryClass,
    central_difference,
    classify_stationary,
    hessian_from_matrix,
)
from ..cost.hessian import EIGENVALUE_TOLERANCE
from .dataclasses import GridWindow, StationaryPoint

GradientField = Callable[[Vector], Vector]

DEDUP_TOLERANCE: Final[float] = 1e-3
RELATIVE_DEGENERACY: Final[float] = 1e-8

_CLASS_ORDER: Final[dict[StationaryClass, int]] = {
    StationaryClass.MAXIMUM: 0,
    StationaryClass.SADDLE: 1,
    StationaryClass.MINIMUM: 2,
    StationaryClass.DEGENERATE: 3,
}


def _safe_gradient(gradient_field: GradientField, z: Vector) -> Vector:
    try:
        value = np.asarray(gradient_field(z), dtype=float)
    except (TiotError, ArithmeticError, np.linalg.LinAlgError) as error:
        logger.debug("Gradient failed at %s: %s", z, error)
        return np.full(2, np.nan)
    return value


def _brackets(values: Vector) -> bool:
    return bool(np.min(values) <= 0.0 <= np.max(values))


def classify_point(
    hessian_matrix: Matrix,
) -> tuple[StationaryClass, HessianEval]:
    hessian = hessian_from_matrix(hessian_matrix)
    scale = float(np.max(np.abs(hessian.eigenvalues)))
    tolerance = max(EIGENVALUE_TOLERANCE, RELATIVE_DEGENERACY * scale)
    return classify_stationary(hessian, tolerance), hessian


class StationarySearch:
    def __init__(
        self,
        gradient_field: GradientField,
        window: GridWindow,
        shape: tuple[int, int],
        tol: float = 1e-10,
        hessian_step: float = 1e-7,
        dedup_tol: float = DEDUP_TOLERANCE,
        max_iter: int = 30,
        workers: int = 1,
    ) -> None:
        if min(shape) < 2:
            raise ValueError(f"Grid needs at least 2x2 nodes, got {shape}")
        self.__field = gradient_field
        self.__window = window
        self.__shape = shape
        self.__tol = tol
        self.__step = hessian_step
        self.__dedup_tol = dedup_tol
        self.__max_iter = max_iter
        self.__workers = workers
        self.__dropped = 0

    @property
    def dropped(self) -> int:
        return self.__dropped

    @property
    def cell_size(self) -> Vector:
        cells = np.array(self.__shape, dtype=float)
        if not self.__window.periodic:
            cells -= 1.0
        return self.__window.span / cells

    def nodes(self) -> tuple[Vector, Vector]:
        window = self.__window
        axes = []
        for axis, count in enumerate(self.__shape):
            lo, hi = window.lower[axis], window.upper[axis]
            if window.periodic:
                axes.append(lo + (hi - lo) * np.arange(count) / count)
            else:
                axes.append(np.linspace(lo, hi, count))
        return axes[0], axes[1]

    def candidates(self) -> list[Vector]:
        u_axis, v_axis = self.nodes()
        points = [np.array([u, v]) for u in u_axis for v in v_axis]
        values = map_ordered(
            lambda z: _safe_gradient(self.__field, z), points, self.__workers
        )
        grid = np.array(values).reshape(len(u_axis), len(v_axis), 2)

        rows, cols = len(u_axis), len(v_axis)
        row_cells = rows if self.__window.periodic else rows - 1
        col_cells = cols if self.__window.periodic else cols - 1
        half = 0.5 * self.cell_size
        starts = []
        for i in range(row_cells):
            for j in range(col_cells):
                corners = np.array(
                    [
                        grid[i, j],
                        grid[(i + 1) % rows, j],
                        grid[i, (j + 1) % cols],
                        grid[(i + 1) % rows, (j + 1) % cols],
                    ]
                )
                if not np.all(np.isfinite(corners)):
                    continue
                if _brackets(corners[:, 0]) and _brackets(corners[:, 1]):
                    starts.append(np.array([u_axis[i], v_axis[j]]) + half)
        logger.debug(
            "%s of %s cells bracket a stationary point",
            len(starts),
            row_cells * col_cells,
        )
        return starts

    def refine(self, start: Vector) -> Optional[StationaryPoint]:
        window = self.__window
        z = np.array(start, dtype=float)
        margin = self.cell_size
        for _ in range(self.__max_iter + 1):
            gradient = _safe_gradient(self.__field, z)
            if not np.all(np.isfinite(gradient)):
                return None
            residual = float(np.linalg.norm(gradient))
            if residual < self.__tol:
                return self.__stationary(z, residual)
            try:
                jacobian = central_difference(self.__field, z, self.__step)
                z = z - np.linalg.solve(jacobian, gradient)
            except (TiotError, np.linalg.LinAlgError) as error:
                logger.debug("Newton from %s failed: %s", start, error)
                return None
            if not np.all(np.isfinite(z)) or not window.contains(z, margin):
                return None
        logger.debug("Newton from %s stalled at %s", start, residual)
        return None

    def run(self) -> list[StationaryPoint]:
        starts = self.candidates()
        results = map_ordered(self.refine, starts, self.__workers)
        self.__dropped = sum(1 for result in results if result is None)
        if self.__dropped:
            logger.debug("Dropped %s unconverged candidates", self.__dropped)

        unique: list[StationaryPoint] = []
        for point in results:
            if point is None:
                continue
            if all(
                self.__window.distance(point.z, kept.z) > self.__dedup_tol
                for kept in unique
            ):
                unique.append(point)
        unique.sort(
            key=lambda p: (_CLASS_ORDER[p.hclass], p.z[0], p.z[1])
        )
        return unique

    def __stationary(self, z: Vector, residual: float) -> StationaryPoint:
        z = self.__window.wrap(z)
        matrix = central_difference(self.__field, z, self.__step)
        hclass, hessian = classify_point(matrix)
        return StationaryPoint(
            z=z, hessian=hessian, hclass=hclass, residual=residual
        )
