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
import math
from typing import Optional

import numpy as np
from pdm_pfsc.logging import logger, traced_function

from ..core.concurrency import map_ordered
from ..core.errors import TiotError
from ..cost import ScenarioContext, TemporalChart, evaluate_j
from ..seeds import default_temporal_window
from .dataclasses import PorkchopGrid


def _cell_cost(chart: TemporalChart, t_dep: float, tof: float) -> float:
    ctx = chart.context
    x = chart.to_design(np.array([t_dep, tof]) / ctx.time_scale)
    try:
        return evaluate_j(x, ctx)
    except TiotError as error:
        logger.debug("Porkchop cell (%s, %s) failed: %s", t_dep, tof, error)
        return math.nan


@traced_function
def porkchop_grid(
    ctx: ScenarioContext,
    window: Optional[tuple[float, float, float, float]] = None,
    shape: tuple[int, int] = (200, 100),
    workers: int = 1,
) -> PorkchopGrid:
    """Cost over departure epoch and flight time, ``window`` given as
    ``(T_lo, T_hi, t_lo, t_hi)`` in seconds."""
    t_lo, t_hi, tof_lo, tof_hi = window or default_temporal_window(ctx)
    if not tof_lo > 0:
        raise ValueError(f"Flight times must be positive, got {tof_lo}")
    t_axis = np.linspace(t_lo, t_hi, shape[0])
    tof_axis = np.linspace(tof_lo, tof_hi, shape[1])

    chart = TemporalChart(ctx)
    cells = [(t_dep, tof) for t_dep in t_axis for tof in tof_axis]
    values = map_ordered(
        lambda cell: _cell_cost(chart, *cell), cells, workers
    )
    grid = PorkchopGrid(
        t_dep=t_axis,
        tof=tof_axis,
        j=np.array(values).reshape(shape),
        d1=ctx.d1,
    )
    if grid.failures:
        logger.warning("%s porkchop cells failed", grid.failures)
    return grid
