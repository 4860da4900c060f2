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
from collections.abc import Callable
from typing import Final

import numpy as np

from ..core.abstractions import Matrix, Vector

DEFAULT_STEP: Final[float] = 1e-7


def central_difference(
    function: Callable[[Vector], Vector],
    z: Vector,
    h: float = DEFAULT_STEP,
    directions: Matrix | None = None,
) -> Matrix:
    """Jacobian of ``function`` at ``z`` by central differences.

    Column ``k`` differentiates along ``directions[:, k]`` (the coordinate
    axes when omitted).
    """
    z = np.asarray(z, dtype=float)
    if directions is None:
        directions = np.eye(z.size)

    columns = []
    for k in range(directions.shape[1]):
        step = h * directions[:, k]
        forward = np.atleast_1d(function(z + step))
        backward = np.atleast_1d(function(z - step))
        columns.append((forward - backward) / (2.0 * h))
    return np.column_stack(columns)


def symmetrize(matrix: Matrix) -> tuple[Matrix, float]:
    asymmetry = float(np.max(np.abs(matrix - matrix.T)))
    return 0.5 * (matrix + matrix.T), asymmetry
