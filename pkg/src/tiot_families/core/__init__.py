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
from .abstractions import (
    ConstraintSystem,
    FloatArray,
    Matrix,
    Vector,
)
from .concurrency import map_ordered
from .errors import (
    BifurcationError,
    CollinearGeometryError,
    CorrectorError,
    DegenerateBurnError,
    InvalidDesignError,
    InvalidElementsError,
    KeplerConvergenceError,
    LambertConvergenceError,
    NoParabolicConnectionError,
    PropagationError,
    ScenarioError,
    SingularSensitivityError,
    StageError,
    TiotError,
)

__all__ = [
    ConstraintSystem.__name__,
    "FloatArray",
    "Matrix",
    "Vector",
    map_ordered.__name__,
    TiotError.__name__,
    InvalidElementsError.__name__,
    InvalidDesignError.__name__,
    KeplerConvergenceError.__name__,
    PropagationError.__name__,
    CollinearGeometryError.__name__,
    LambertConvergenceError.__name__,
    NoParabolicConnectionError.__name__,
    SingularSensitivityError.__name__,
    DegenerateBurnError.__name__,
    CorrectorError.__name__,
    BifurcationError.__name__,
    ScenarioError.__name__,
    StageError.__name__,
]
