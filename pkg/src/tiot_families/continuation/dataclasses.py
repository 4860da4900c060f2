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
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Optional

import numpy as np

from ..core.abstractions import Vector
from ..cost import CostEval, DerivDomain, DesignPoint, StationaryClass
from ..lambert import BranchFlag


@dataclass(frozen=True)
class ContinuationConfig:
    ds: float = field(default=0.01)
    tmax: float = field(default=4.0e4)
    tmin: float = field(default=10.0)
    sing_tol: float = field(default=0.01)
    cycle_tol: Optional[float] = field(default=None)
    max_steps: int = field(default=10000)
    newton_tol: float = field(default=1e-10)
    newton_max_iter: int = field(default=20)
    jump_factor: float = field(default=5.0)
    max_halvings: int = field(default=5)
    regrow_after: int = field(default=10)
    cycle_arm_steps: int = field(default=20)
    fd_step: float = field(default=1e-7)

    def __post_init__(self) -> None:
        if not self.ds > 0:
            raise ValueError(f"Arclength step must be positive: {self.ds}")
        if not 0 < self.tmin < self.tmax:
            raise ValueError(
                f"Need 0 < tmin < tmax, got {self.tmin}, {self.tmax}"
            )
        tolerances = (
            self.sing_tol,
            self.closure_tolerance,
            self.newton_tol,
            self.fd_step,
        )
        if any(not value > 0 for value in tolerances):
            raise ValueError("Continuation tolerances must be positive")
        if self.max_steps < 1 or self.newton_max_iter < 1:
            raise ValueError("Iteration caps must be at least one")

    @property
    def closure_tolerance(self) -> float:
        return 0.5 * self.ds if self.cycle_tol is None else self.cycle_tol

    @property
    def jump_limit(self) -> float:
        return self.jump_factor * self.ds

    def with_changes(self, **changes: Any) -> "ContinuationConfig":
        return replace(self, **changes)


class TerminationReason(Enum):
    TOF_ABOVE_MAX = "tof_above_max"
    TOF_BELOW_MIN = "tof_below_min"
    SINGULARITY_PI = "singularity_pi"
    CYCLE_CLOSED = "cycle_closed"
    STEP_CAP = "step_cap"
    CORRECTOR_FAILURE = "corrector_failure"


class FamilyEventKind(Enum):
    FOLD = "fold"
    CLASS_CHANGE = "class_change"
    STEP_HALVED = "step_halved"
    BIFURCATION_CANDIDATE = "bifurcation_candidate"


@dataclass(frozen=True)
class FamilyEvent:
    kind: FamilyEventKind = field()
    index: int = field()
    value: float = field(default=math.nan)


@dataclass(frozen=True, eq=False)
class FamilyMember:
    x: DesignPoint = field()
    cost: CostEval = field(repr=False)
    hclass: StationaryClass = field()
    theta: float = field()
    tangent: Vector = field(repr=False)
    eigenvalues: Vector = field(repr=False)
    pvt_ok: Optional[bool] = field(default=None)

    @property
    def j(self) -> float:
        return self.cost.j

    def with_pvt(self, pvt_ok: Optional[bool]) -> "FamilyMember":
        return replace(self, pvt_ok=pvt_ok)

    def reversed(self) -> "FamilyMember":
        return replace(self, tangent=-self.tangent)


@dataclass(frozen=True, eq=False)
class Family:
    members: tuple[FamilyMember, ...] = field()
    end1: TerminationReason = field()
    end2: TerminationReason = field()
    domain: DerivDomain = field()
    d1: BranchFlag = field()
    seed_id: str = field()
    events: tuple[FamilyEvent, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("A family needs at least one member")

    def __len__(self) -> int:
        return len(self.members)

    @property
    def first(self) -> FamilyMember:
        return self.members[0]

    @property
    def last(self) -> FamilyMember:
        return self.members[-1]

    @property
    def is_cycle(self) -> bool:
        return self.end1 is TerminationReason.CYCLE_CLOSED

    def scaled_points(self, time_scale: float) -> Vector:
        return np.array([m.x.scaled(time_scale) for m in self.members])

    def with_members(self, members: Sequence[FamilyMember]) -> "Family":
        return replace(self, members=tuple(members))
