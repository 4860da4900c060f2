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
from .dataclasses import BranchFlag, ConicKind, LambertSolution
from .izzo import (
    COLLINEAR_TOLERANCE,
    classify_conic,
    solve_lambert,
    transfer_angle,
)
from .parabolic import parabolic_lambert

__all__ = [
    "COLLINEAR_TOLERANCE",
    BranchFlag.__name__,
    ConicKind.__name__,
    LambertSolution.__name__,
    transfer_angle.__name__,
    classify_conic.__name__,
    "solve_lambert",
    parabolic_lambert.__name__,
]
