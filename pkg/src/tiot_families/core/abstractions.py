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
from typing import Protocol, TypeAlias, runtime_checkable

import numpy as np
import numpy.typing as npt

FloatArray: TypeAlias = npt.NDArray[np.float64]
Vector: TypeAlias = FloatArray
Matrix: TypeAlias = FloatArray


@runtime_checkable
class ConstraintSystem(Protocol):
    """Two equations in three scaled unknowns, as seen by the corrector."""

    def residual(self, z: Vector) -> Vector:
        # Method empty: Only a protocol stub
        pass

    def jacobian(self, z: Vector) -> Matrix:
        # Method empty: Only a protocol stub
        pass
