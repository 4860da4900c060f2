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
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Final

import numpy as np

from ..core.abstractions import Matrix, Vector
from ..core.errors import InvalidDesignError, InvalidElementsError
from ..kepler import (
    DEFAULT_PROPAGATOR,
    CartesianState,
    ClassicalElements,
    GravModel,
    PropagatorSettings,
    Stm,
    elements_to_state,
    mean_motion,
    orbital_period,
)
from ..lambert import BranchFlag, LambertSolution

DEFAULT_TIME_SCALE: Final[float] = 1000.0

_TWO_PI: Final[float] = 2.0 * math.pi


class DerivDomain(Enum):
    ANGULAR = "angular"
    TEMPORAL = "temporal"

    @classmethod
    def parse(cls, value: str) -> "DerivDomain":
        try:
            return cls(value.lower())
        except ValueError as error:
            raise ValueError(f"Unknown optimality domain: {value}") from error


class StationaryClass(Enum):
    MINIMUM = "minimum"
    MAXIMUM = "maximum"
    SADDLE = "saddle"
    DEGENERATE = "degenerate"

    @property
    def symbol(self) -> str:
        return _CLASS_SYMBOLS[self]


_CLASS_SYMBOLS: Final[dict[StationaryClass, str]] = {
    StationaryClass.MINIMUM: "m",
    StationaryClass.MAXIMUM: "M",
    StationaryClass.SADDLE: "s",
    StationaryClass.DEGENERATE: "d",
}


@dataclass(frozen=True)
class DesignPoint:
    m1: float = field()
    m2: float = field()
    tof: float = field()

    def __post_init__(self) -> None:
        if not (math.isfinite(self.m1) and math.isfinite(self.m2)):
            raise InvalidDesignError(f"Mean anomalies must be finite: {self}")
        if not (math.isfinite(self.tof) and self.tof > 0):
            raise InvalidDesignError(
                f"Time of flight must be positive: {self}"
            )

    def scaled(self, time_scale: float) -> Vector:
        return np.array([self.m1, self.m2, self.tof / time_scale])

    @classmethod
    def from_scaled(cls, z: Vector, time_scale: float) -> "DesignPoint":
        return cls(float(z[0]), float(z[1]), float(z[2]) * time_scale)

    def wrapped(self) -> tuple[float, float]:
        return self.m1 % _TWO_PI, self.m2 % _TWO_PI


@dataclass(frozen=True)
class ScenarioContext:
    dep: ClassicalElements = field()
    arr: ClassicalElements = field()
    g: GravModel = field(default_factory=GravModel)
    d1: BranchFlag = field(default=BranchFlag.LONG)
    time_scale: float = field(default=DEFAULT_TIME_SCALE)
    propagator: PropagatorSettings = field(default=DEFAULT_PROPAGATOR)

    def __post_init__(self) -> None:
        if not self.time_scale > 0:
            raise InvalidElementsError(
                f"Time scale must be positive, got {self.time_scale}"
            )

    @cached_property
    def n1(self) -> float:
        return mean_motion(self.dep, self.g)

    @cached_property
    def n2(self) -> float:
        return mean_motion(self.arr, self.g)

    @cached_property
    def synodic_period(self) -> float:
        rate = abs(self.n2 - self.n1)
        return math.inf if rate == 0 else _TWO_PI / rate

    @property
    def longest_period(self) -> float:
        return max(
            orbital_period(self.dep, self.g), orbital_period(self.arr, self.g)
        )

    def with_branch(self, d1: BranchFlag) -> "ScenarioContext":
        return replace(self, d1=d1)

    def departure_state(self, m1: float) -> CartesianState:
        return elements_to_state(self.dep, m1, self.g)

    def arrival_state(self, m2: float) -> CartesianState:
        return elements_to_state(self.arr, m2, self.g)


@dataclass(frozen=True, eq=False)
class CostEval:
    j: float = field()
    dv1: Vector = field()
    dv2: Vector = field()
    djdm1: float = field()
    djdm2: float = field()
    djdtof_explicit: float = field()
    djdT: float = field()  # pylint: disable=invalid-name
    djdt_total: float = field()
    arc: LambertSolution = field(repr=False)

    @property
    def theta(self) -> float:
        return self.arc.theta

    def angular_gradient(self) -> Vector:
        return np.array([self.djdm1, self.djdm2])

    def temporal_gradient(self) -> Vector:
        return np.array([self.djdT, self.djdt_total])


@dataclass(frozen=True, eq=False)
class VelocitySensitivities:
    dv1_dr1: Matrix = field()
    dv1_dr2: Matrix = field()
    dv2_dr1: Matrix = field()
    dv2_dr2: Matrix = field()
    stm: Stm = field(repr=False)


@dataclass(frozen=True, eq=False)
class TofSensitivity:
    dv1g_dt: Vector = field()
    dv2g_dt: Vector = field()
    djdt: float = field()


@dataclass(frozen=True, eq=False)
class HessianEval:
    matrix: Matrix = field()
    eigenvalues: Vector = field()
    asymmetry: float = field()
