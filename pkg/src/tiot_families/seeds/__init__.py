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
from .dataclasses import (
    ALL_SOURCES,
    GridWindow,
    ManualSeed,
    Seed,
    SeedLabel,
    SeedOrigin,
    SeedSettings,
    StationaryPoint,
)
from .landscape import StationarySearch, classify_point
from .sources import (
    asymptotic_seeds_inf,
    asymptotic_seeds_zero,
    collect_seeds,
    default_temporal_window,
    default_tof_planes,
    distance_gradient,
    distance_stationary_points,
    grid_seeds,
    manual_seeds,
    parabolic_cost,
    parabolic_gradient,
)

__all__ = [
    "ALL_SOURCES",
    GridWindow.__name__,
    ManualSeed.__name__,
    Seed.__name__,
    SeedLabel.__name__,
    SeedOrigin.__name__,
    SeedSettings.__name__,
    StationaryPoint.__name__,
    StationarySearch.__name__,
    classify_point.__name__,
    "asymptotic_seeds_inf",
    "asymptotic_seeds_zero",
    "grid_seeds",
    collect_seeds.__name__,
    default_temporal_window.__name__,
    default_tof_planes.__name__,
    distance_gradient.__name__,
    distance_stationary_points.__name__,
    manual_seeds.__name__,
    parabolic_cost.__name__,
    parabolic_gradient.__name__,
]
