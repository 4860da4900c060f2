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
    PorkchopGrid,
    Timeline,
    TimelineEvent,
    TimelineSegment,
)
from .grid import porkchop_grid
from .intersections import (
    family_segments,
    intersect_families,
    reconverge_event,
    segment_brackets,
)
from .timeline import coverage_gap, departure_anomalies, time_line

__all__ = [
    PorkchopGrid.__name__,
    Timeline.__name__,
    TimelineEvent.__name__,
    TimelineSegment.__name__,
    "porkchop_grid",
    "intersect_families",
    family_segments.__name__,
    reconverge_event.__name__,
    segment_brackets.__name__,
    time_line.__name__,
    coverage_gap.__name__,
    departure_anomalies.__name__,
]
