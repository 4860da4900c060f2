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
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..core.abstractions import Matrix, Vector
from ..cost import DesignPoint, StationaryClass
from ..lambert import BranchFlag


@dataclass(frozen=True, eq=False)
class PorkchopGrid:
    t_dep: Vector = field(repr=False)
    tof: Vector = field(repr=False)
    j: Matrix = field(repr=False)
    d1: BranchFlag = field()

    def __post_init__(self) -> None:
        for name in ("t_dep", "tof"):
            axis = np.asarray(getattr(self, name), dtype=float)
            if axis.ndim != 1 or np.any(np.diff(axis) <= 0):
                raise ValueError(f"Porkchop axis {name} must increase")
        if np.shape(self.j) != (len(self.t_dep), len(self.tof)):
            raise ValueError("Cost matrix does not match the grid axes")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.t_dep), len(self.tof)

    @property
    def failures(self) -> int:
        return int(np.count_nonzero(np.isnan(self.j)))

    def minimum(self) -> tuple[float, float, float]:
        """Departure epoch, flight time and cost of the cheapest cell."""
        if self.failures == self.j.size:
            return math.nan, math.nan, math.nan
        row, col = np.unravel_index(np.nanargmin(self.j), self.j.shape)
        return (
            float(self.t_dep[row]),
            float(self.tof[col]),
            float(self.j[row, col]),
        )


@dataclass(frozen=True)
class TimelineSegment:
    t_start: float = field()
    t_end: float = field()
    m1_start: float = field()
    m2_start: float = field()
    m1_end: float = field()
    m2_end: float = field()

    @property
    def slope(self) -> float:
        return (self.m2_end - self.m2_start) / (self.m1_end - self.m1_start)

    def intercept(self) -> float:
        """Arrival anomaly where the carrying line crosses M1 = 0."""
        return (self.m2_start - self.slope * self.m1_start) % (2.0 * math.pi)


@dataclass(frozen=True)
class Timeline:
    segments: tuple[TimelineSegment, ...] = field()
    slope: float = field()

    def __len__(self) -> int:
        return len(self.segments)


@dataclass(frozen=True)
class TimelineEvent:
    t_dep: float = field()
    tof: float = field()
    family_index: int = field()
    member_interp: DesignPoint = field()
    hclass: StationaryClass = field()
    j: float = field()
    residual: float = field()
    pvt_ok: Optional[bool] = field(default=None)
