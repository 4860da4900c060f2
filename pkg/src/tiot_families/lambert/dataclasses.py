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
from enum import Enum

import numpy as np

from ..core.abstractions import Vector


class BranchFlag(Enum):
    SHORT = "short"
    LONG = "long"

    @property
    def symbol(self) -> str:
        return self.value[0]

    @classmethod
    def parse(cls, value: str) -> "BranchFlag":
        for member in cls:
            if value.lower() in (member.value, member.symbol):
                return member
        raise ValueError(f"Unknown transfer branch: {value}")


class ConicKind(Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True, eq=False)
class LambertSolution:
    r1: Vector = field()
    r2: Vector = field()
    v1g: Vector = field()
    v2g: Vector = field()
    theta: float = field()
    conic: ConicKind = field()
    d1: BranchFlag = field()
    tof: float = field(default=math.inf)
    p: float = field(default=math.nan)

    @property
    def is_parabolic_limit(self) -> bool:
        return math.isinf(self.tof)

    def arc_normal(self) -> Vector:
        h = np.cross(self.r1, self.v1g)
        return h / np.linalg.norm(h)

    def semi_major_axis(self, mu: float) -> float:
        energy = float(self.v1g @ self.v1g) / 2.0 - mu / float(
            np.linalg.norm(self.r1)
        )
        if energy == 0.0:
            return math.inf
        return -mu / (2.0 * energy)

    def __repr__(self) -> str:
        return "<LambertSolution {} {} theta={:.6f} tof={}>".format(
            self.d1.value, self.conic.value, self.theta, self.tof
        )
