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
from typing import Final, Optional

import numpy as np

from ..core.abstractions import Vector
from ..cost import DesignPoint, HessianEval, StationaryClass
from ..lambert import BranchFlag

_TWO_PI: Final[float] = 2.0 * math.pi


class SeedOrigin(Enum):
    ASYMPTOTE_INF = "asymptote_inf"
    ASYMPTOTE_ZERO = "asymptote_zero"
    GRID = "grid"
    MANUAL = "manual"

    @property
    def symbol(self) -> str:
        return _ORIGIN_SYMBOLS[self]

    @classmethod
    def parse(cls, value: str) -> "SeedOrigin":
        for member in cls:
            if value.lower() in (member.value, member.symbol):
                return member
        raise ValueError(f"Unknown seed source: {value}")


_ORIGIN_SYMBOLS: Final[dict[SeedOrigin, str]] = {
    SeedOrigin.ASYMPTOTE_INF: "inf",
    SeedOrigin.ASYMPTOTE_ZERO: "zero",
    SeedOrigin.GRID: "grid",
    SeedOrigin.MANUAL: "manual",
}


@dataclass(frozen=True)
class SeedLabel:
    origin: SeedOrigin = field()
    d1: BranchFlag = field()
    hclass: StationaryClass = field()
    index: int = field()

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"Seed ordinals start at 1, got {self.index}")

    @property
    def seed_id(self) -> str:
        return "/".join(
            (
                self.origin.symbol,
                self.d1.symbol,
                self.hclass.symbol,
                str(self.index),
            )
        )

    def __str__(self) -> str:
        return self.seed_id


@dataclass(frozen=True)
class Seed:
    x: DesignPoint = field()
    label: SeedLabel = field()
    anchor: Optional[tuple[float, float]] = field(default=None)

    @property
    def seed_id(self) -> str:
        return self.label.seed_id

    @property
    def is_asymptotic(self) -> bool:
        return self.label.origin in (
            SeedOrigin.ASYMPTOTE_INF,
            SeedOrigin.ASYMPTOTE_ZERO,
        )


@dataclass(frozen=True)
class GridWindow:
    """Rectangle of two landscape coordinates; periodic windows wrap."""

    lower: tuple[float, float] = field()
    upper: tuple[float, float] = field()
    periodic: bool = field(default=False)

    def __post_init__(self) -> None:
        bounds = (*self.lower, *self.upper)
        if not all(math.isfinite(value) for value in bounds):
            raise ValueError(f"Window bounds must be finite: {bounds}")
        if not all(hi > lo for lo, hi in zip(self.lower, self.upper)):
            raise ValueError(
                f"Degenerate search window {self.lower} .. {self.upper}"
            )

    @classmethod
    def angles(cls) -> "GridWindow":
        return cls((0.0, 0.0), (_TWO_PI, _TWO_PI), periodic=True)

    @property
    def span(self) -> Vector:
        return np.subtract(self.upper, self.lower)

    def wrap(self, z: Vector) -> Vector:
        z = np.asarray(z, dtype=float)
        if not self.periodic:
            return z
        return self.lower + np.mod(z - self.lower, self.span)

    def offset(self, first: Vector, second: Vector) -> Vector:
        delta = np.asarray(second, dtype=float) - first
        if self.periodic:
            delta -= self.span * np.round(delta / self.span)
        return delta

    def distance(self, first: Vector, second: Vector) -> float:
        return float(np.linalg.norm(self.offset(first, second)))

    def contains(self, z: Vector, margin: Vector | float = 0.0) -> bool:
        if self.periodic:
            return True
        z = np.asarray(z, dtype=float)
        return bool(
            np.all(z >= np.subtract(self.lower, margin))
            and np.all(z <= np.add(self.upper, margin))
        )


@dataclass(frozen=True, eq=False)
class StationaryPoint:
    z: Vector = field()
    hessian: HessianEval = field(repr=False)
    hclass: StationaryClass = field()
    residual: float = field()


@dataclass(frozen=True)
class ManualSeed:
    x: DesignPoint = field()
    branch: BranchFlag = field()


ALL_SOURCES: Final[frozenset[SeedOrigin]] = frozenset(SeedOrigin)


@dataclass(frozen=True)
class SeedSettings:
    grid_n: int = field(default=64)
    t_seed: float = field(default=2.5e4)
    t_zero: float = field(default=100.0)
    grid_resolution: tuple[int, int] = field(default=(64, 64))
    window: Optional[tuple[float, float, float, float]] = field(default=None)
    tof_planes: Optional[tuple[float, ...]] = field(default=None)
    sources: frozenset[SeedOrigin] = field(default=ALL_SOURCES)
    manual: tuple[ManualSeed, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.grid_n < 32:
            raise ValueError(
                f"Asymptote grids need grid_n >= 32: {self.grid_n}"
            )
        if min(self.grid_resolution) < 2:
            raise ValueError(
                f"Grid resolution too small: {self.grid_resolution}"
            )
        if not (self.t_seed > 0 and self.t_zero > 0):
            raise ValueError("Asymptote stand-in times must be positive")
        if self.window is not None:
            t_lo, t_hi, tof_lo, tof_hi = self.window
            if not (t_hi > t_lo and tof_hi > tof_lo > 0):
                raise ValueError(f"Degenerate seed window: {self.window}")
        if self.tof_planes is not None and any(
            not tof > 0 for tof in self.tof_planes
        ):
            raise ValueError(f"Search planes need t > 0: {self.tof_planes}")

    def uses(self, origin: SeedOrigin) -> bool:
        return origin in self.sources
