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
from typing import Any, Final, Optional

from ..atlas import AtlasSettings
from ..continuation import ContinuationConfig
from ..cost import DEFAULT_TIME_SCALE, DerivDomain, ScenarioContext
from ..kepler import ClassicalElements, GravModel
from ..lambert import BranchFlag
from ..pvt import DEFAULT_PVT_TOLERANCE, DEFAULT_SAMPLES
from ..seeds import SeedSettings, default_temporal_window

ORBIT_SIDES: Final[tuple[str, ...]] = ("departure", "arrival")
ELEMENT_NAMES: Final[tuple[str, ...]] = (
    "a",
    "e",
    "i",
    "raan",
    "argp",
    "m0",
)
ANGULAR_ELEMENTS: Final[frozenset[str]] = frozenset(
    ("i", "raan", "argp", "m0")
)
BOTH_BRANCHES: Final[str] = "both"


def parse_branches(value: str) -> tuple[BranchFlag, ...]:
    if value.lower() == BOTH_BRANCHES:
        return (BranchFlag.SHORT, BranchFlag.LONG)
    return (BranchFlag.parse(value),)


def branches_name(branches: tuple[BranchFlag, ...]) -> str:
    if set(branches) == set(BranchFlag):
        return BOTH_BRANCHES
    return branches[0].value


@dataclass(frozen=True)
class PorkchopSettings:
    resolution: tuple[int, int] = field(default=(200, 100))
    window: Optional[tuple[float, float, float, float]] = field(default=None)
    horizon: Optional[float] = field(default=None)

    def __post_init__(self) -> None:
        if min(self.resolution) < 2:
            raise ValueError(
                f"Porkchop resolution too small: {self.resolution}"
            )
        if self.window is not None:
            t_lo, t_hi, tof_lo, tof_hi = self.window
            if not (t_hi > t_lo and tof_hi > tof_lo > 0):
                raise ValueError(f"Degenerate porkchop window: {self.window}")
        if self.horizon is not None and not (
            math.isfinite(self.horizon) and self.horizon > 0
        ):
            raise ValueError(
                f"Time-line horizon must be positive: {self.horizon}"
            )

    def time_range(self, ctx: ScenarioContext) -> tuple[float, float]:
        """Departure epochs scanned by the time-line projection."""
        if self.horizon is not None:
            return (0.0, self.horizon)
        if self.window is not None:
            return (self.window[0], self.window[1])
        t_lo, t_hi, _, _ = default_temporal_window(ctx)
        return (t_lo, t_hi)


@dataclass(frozen=True)
class AnalysisSettings:
    pvt_samples: int = field(default=DEFAULT_SAMPLES)
    pvt_tol: float = field(default=DEFAULT_PVT_TOLERANCE)

    def __post_init__(self) -> None:
        if self.pvt_samples < 3:
            raise ValueError(
                f"Primer histories need three samples: {self.pvt_samples}"
            )
        if not self.pvt_tol > 0:
            raise ValueError(f"PVT tolerance must be positive: {self.pvt_tol}")


@dataclass(frozen=True)
class SweepSettings:
    element: str = field()
    values: tuple[float, ...] = field()

    def __post_init__(self) -> None:
        side, _, name = self.element.partition(".")
        if side not in ORBIT_SIDES or name not in ELEMENT_NAMES:
            raise ValueError(
                f"Sweep element must look like 'arrival.i': {self.element}"
            )
        if not self.values:
            raise ValueError("A sweep needs at least one value")

    @property
    def side(self) -> str:
        return self.element.partition(".")[0]

    @property
    def name(self) -> str:
        return self.element.partition(".")[2]

    def internal_value(self, value: float) -> float:
        """Input units (km, degrees) to the units of ClassicalElements."""
        if self.name in ANGULAR_ELEMENTS:
            return math.radians(value)
        return value


@dataclass(frozen=True)
class ScenarioFile:
    departure: ClassicalElements = field()
    arrival: ClassicalElements = field()
    gravity: GravModel = field(default_factory=GravModel)
    branches: tuple[BranchFlag, ...] = field(default=(BranchFlag.LONG,))
    domain: DerivDomain = field(default=DerivDomain.TEMPORAL)
    time_scale: float = field(default=DEFAULT_TIME_SCALE)
    continuation: ContinuationConfig = field(
        default_factory=ContinuationConfig
    )
    seeds: SeedSettings = field(default_factory=SeedSettings)
    porkchop: PorkchopSettings = field(default_factory=PorkchopSettings)
    analysis: AnalysisSettings = field(default_factory=AnalysisSettings)
    atlas: AtlasSettings = field(default_factory=AtlasSettings)
    sweep: Optional[SweepSettings] = field(default=None)
    name: str = field(default="scenario")

    def __post_init__(self) -> None:
        if not self.branches:
            raise ValueError("At least one transfer branch is required")
        if len(set(self.branches)) != len(self.branches):
            raise ValueError(f"Duplicate transfer branches: {self.branches}")
        if not self.time_scale > 0:
            raise ValueError(
                f"Time scale must be positive, got {self.time_scale}"
            )

    def context(self, d1: BranchFlag) -> ScenarioContext:
        return ScenarioContext(
            dep=self.departure,
            arr=self.arrival,
            g=self.gravity,
            d1=d1,
            time_scale=self.time_scale,
        )

    def contexts(self) -> tuple[ScenarioContext, ...]:
        return tuple(self.context(d1) for d1 in self.branches)

    def with_element(self, element: str, value: float) -> "ScenarioFile":
        """Copy with one element replaced, ``value`` in input units.

        The copy carries no sweep block.
        """
        sweep = SweepSettings(element, (value,))
        orbit: ClassicalElements = getattr(self, sweep.side)
        changed = orbit.with_changes(
            **{sweep.name: sweep.internal_value(value)}
        )
        return replace(self, sweep=None, **{sweep.side: changed})

    def with_changes(self, **changes: Any) -> "ScenarioFile":
        return replace(self, **changes)
