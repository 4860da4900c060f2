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
from .anomaly import (
    mean_from_eccentric,
    mean_motion,
    orbital_period,
    solve_kepler,
    wrap_angle,
    wrapped_difference,
)
from .dataclasses import (
    EARTH_MU,
    CartesianState,
    ClassicalElements,
    GravModel,
    PropagatorSettings,
    Stm,
)
from .propagation import (
    DEFAULT_PROPAGATOR,
    gravity_gradient,
    propagate_kepler,
    propagate_with_stm,
)
from .state import (
    elements_to_state,
    orbit_normal,
    periapsis_direction,
    rotation_matrix,
    state_derivs_wrt_mean_anomaly,
)

__all__ = [
    "EARTH_MU",
    "DEFAULT_PROPAGATOR",
    CartesianState.__name__,
    ClassicalElements.__name__,
    GravModel.__name__,
    PropagatorSettings.__name__,
    Stm.__name__,
    solve_kepler.__name__,
    mean_from_eccentric.__name__,
    mean_motion.__name__,
    orbital_period.__name__,
    wrap_angle.__name__,
    wrapped_difference.__name__,
    elements_to_state.__name__,
    state_derivs_wrt_mean_anomaly.__name__,
    rotation_matrix.__name__,
    orbit_normal.__name__,
    periapsis_direction.__name__,
    gravity_gradient.__name__,
    propagate_kepler.__name__,
    "propagate_with_stm",
]
