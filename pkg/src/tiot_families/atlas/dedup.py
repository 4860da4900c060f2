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
from collections.abc import Sequence
from typing import Final

import numpy as np
from pdm_pfsc.logging import logger
from scipy.spatial import cKDTree

from ..continuation import Family
from ..core.abstractions import Matrix

_TWO_PI: Final[float] = 2.0 * math.pi


def _periodic_points(family: Family, time_scale: float) -> Matrix:
    points = family.scaled_points(time_scale)
    wrapped = np.mod(points[:, :2], _TWO_PI)
    # np.mod can round up to the period itself
    points[:, :2] = np.where(wrapped >= _TWO_PI, 0.0, wrapped)
    return points


def overlap_count(
    candidate: Matrix, tree: cKDTree, tol: float
) -> int:
    distances, _ = tree.query(candidate, k=1)
    return int(np.count_nonzero(distances < tol))


def dedup(
    families: Sequence[Family],
    tol: float,
    time_scale: float,
    min_overlap: int = 10,
) -> list[Family]:
    """Drop families that retrace a longer one.

    A family is a duplicate when more than ``min_overlap`` of its members
    lie within ``tol`` (scaled, anomalies modulo 2π) of a kept family.
    Input order breaks ties between equally long traces.
    """
    if not families:
        return []
    points = [_periodic_points(f, time_scale) for f in families]
    top = max(float(np.max(p[:, 2])) for p in points)
    boxsize = [_TWO_PI, _TWO_PI, 2.0 * top + 1.0]

    order = sorted(range(len(families)), key=lambda k: -len(families[k]))
    kept: list[int] = []
    trees: list[cKDTree] = []
    for k in order:
        duplicate = any(
            overlap_count(points[k], tree, tol) > min_overlap
            for tree in trees
        )
        if duplicate:
            logger.debug(
                "Family from %s retraces a longer family",
                families[k].seed_id,
            )
            continue
        kept.append(k)
        trees.append(cKDTree(points[k], boxsize=boxsize))

    dropped = len(families) - len(kept)
    if dropped:
        logger.info("Removed %s duplicate families", dropped)
    return [families[k] for k in sorted(kept)]
