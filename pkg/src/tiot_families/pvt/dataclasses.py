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
from dataclasses import dataclass, field
from typing import Final

import numpy as np

from ..core.abstractions import Matrix, Vector

INTERIOR_EXCLUSION: Final[float] = 0.005


@dataclass(frozen=True, eq=False)
class PrimerHistory:
    tau: Vector = field()
    p: Matrix = field(repr=False)
    pmag: Vector = field(repr=False)
    boundary_residual: float = field()
    coast_defect: float = field(default=0.0)

    def __post_init__(self) -> None:
        tau = np.asarray(self.tau, dtype=float)
        if tau.ndim != 1 or tau.size < 2:
            raise ValueError("A primer history needs at least two samples")
        if np.any(np.diff(tau) <= 0):
            raise ValueError("Primer samples must increase strictly in time")
        if np.shape(self.pmag) != tau.shape:
            raise ValueError("Primer magnitudes do not match the samples")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "pmag", np.asarray(self.pmag, dtype=float))

    def __len__(self) -> int:
        return int(self.tau.size)

    @property
    def duration(self) -> float:
        return float(self.tau[-1] - self.tau[0])

    def interior_mask(self, exclusion: float = INTERIOR_EXCLUSION) -> Vector:
        start = self.tau[0] + exclusion * self.duration
        stop = self.tau[-1] - exclusion * self.duration
        return (self.tau > start) & (self.tau < stop)

    def interior_max(self, exclusion: float = INTERIOR_EXCLUSION) -> float:
        interior = self.pmag[self.interior_mask(exclusion)]
        if interior.size == 0:
            return float(max(self.pmag[0], self.pmag[-1]))
        return float(np.max(interior))
