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
"""Straight time-lines traced by the two anomalies at departure."""
import math
from typing import Final

import numpy as np

from ..cost import ScenarioContext
from .dataclasses import Timeline, TimelineSegment

_TWO_PI: Final[float] = 2.0 * math.pi


def departure_anomalies(
    ctx: ScenarioContext, t_dep: float
) -> tuple[float, float]:
    """Departure anomaly and arrival-orbit anomaly at epoch ``t_dep``."""
    return (
        ctx.n1 * t_dep + ctx.dep.m0,
        ctx.n2 * t_dep + ctx.arr.m0,
    )


def _wrap_times(
    rate: float, phase: float, start: float, stop: float
) -> list[float]:
    first = math.floor((rate * start + phase) / _TWO_PI) + 1
    last = math.ceil((rate * stop + phase) / _TWO_PI) - 1
    return [(_TWO_PI * k - phase) / rate for k in range(first, last + 1)]


def time_line(
    ctx: ScenarioContext, t_range: tuple[float, float]
) -> Timeline:
    start, stop = t_range
    if not (math.isfinite(start) and math.isfinite(stop) and stop > start):
        raise ValueError(f"Time-line range must be finite: {t_range}")

    cuts = sorted(
        {
            start,
            stop,
            *_wrap_times(ctx.n1, ctx.dep.m0, start, stop),
            *_wrap_times(ctx.n2, ctx.arr.m0, start, stop),
        }
    )
    segments = []
    for t_a, t_b in zip(cuts[:-1], cuts[1:]):
        if t_b - t_a <= 0.0:
            continue
        m1_a, m2_a = departure_anomalies(ctx, t_a)
        base1 = math.floor((m1_a + ctx.n1 * 0.5 * (t_b - t_a)) / _TWO_PI)
        base2 = math.floor((m2_a + ctx.n2 * 0.5 * (t_b - t_a)) / _TWO_PI)
        m1_a -= _TWO_PI * base1
        m2_a -= _TWO_PI * base2
        segments.append(
            TimelineSegment(
                t_start=t_a,
                t_end=t_b,
                m1_start=m1_a,
                m2_start=m2_a,
                m1_end=m1_a + ctx.n1 * (t_b - t_a),
                m2_end=m2_a + ctx.n2 * (t_b - t_a),
            )
        )
    return Timeline(segments=tuple(segments), slope=ctx.n2 / ctx.n1)


def coverage_gap(timeline: Timeline) -> float:
    """Largest perpendicular gap between parallel time-lines on the torus."""
    if not timeline.segments:
        return math.nan
    intercepts = np.unique(
        np.round([s.intercept() for s in timeline.segments], 12)
    )
    gaps = np.diff(np.append(intercepts, intercepts[0] + _TWO_PI))
    return float(np.max(gaps)) / math.hypot(1.0, timeline.slope)
