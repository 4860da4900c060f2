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
from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from ..core.abstractions import Matrix, Vector
from .dataclasses import DerivDomain, DesignPoint, ScenarioContext


class DomainChart(ABC):
    """Linear map from two domain coordinates to a design point."""

    def __init__(self, ctx: ScenarioContext) -> None:
        self.__ctx = ctx

    @property
    def context(self) -> ScenarioContext:
        return self.__ctx

    @property
    @abstractmethod
    def domain(self) -> DerivDomain:
        raise NotImplementedError()

    @abstractmethod
    def to_design(self, z: Vector) -> DesignPoint:
        raise NotImplementedError()

    @abstractmethod
    def from_design(self, x: DesignPoint) -> Vector:
        raise NotImplementedError()

    @abstractmethod
    def basis(self) -> Matrix:
        """3×2 derivative of the scaled design vector by the chart."""
        raise NotImplementedError()


class AngularChart(DomainChart):
    def __init__(self, ctx: ScenarioContext, tof: float) -> None:
        super().__init__(ctx)
        self.__tof = tof

    @property
    def domain(self) -> DerivDomain:
        return DerivDomain.ANGULAR

    @property
    def tof(self) -> float:
        return self.__tof

    def to_design(self, z: Vector) -> DesignPoint:
        return DesignPoint(float(z[0]), float(z[1]), self.__tof)

    def from_design(self, x: DesignPoint) -> Vector:
        return np.array([x.m1, x.m2])

    def basis(self) -> Matrix:
        return np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])


class TemporalChart(DomainChart):
    """Scaled departure epoch and time of flight ``(T, t) / time_scale``."""

    @property
    def domain(self) -> DerivDomain:
        return DerivDomain.TEMPORAL

    def to_design(self, z: Vector) -> DesignPoint:
        ctx = self.context
        departure = float(z[0]) * ctx.time_scale
        tof = float(z[1]) * ctx.time_scale
        return DesignPoint(
            ctx.n1 * departure + ctx.dep.m0,
            ctx.n2 * (departure + tof) + ctx.arr.m0,
            tof,
        )

    def from_design(self, x: DesignPoint) -> Vector:
        ctx = self.context
        departure = (x.m1 - ctx.dep.m0) / ctx.n1
        return np.array([departure, x.tof]) / ctx.time_scale

    def basis(self) -> Matrix:
        ctx = self.context
        scale = ctx.time_scale
        return np.array(
            [
                [ctx.n1 * scale, 0.0],
                [ctx.n2 * scale, ctx.n2 * scale],
                [0.0, 1.0],
            ]
        )


def chart_for(
    ctx: ScenarioContext, dom: DerivDomain, tof: Optional[float] = None
) -> DomainChart:
    if dom is DerivDomain.TEMPORAL:
        return TemporalChart(ctx)
    if tof is None:
        raise ValueError("The angular chart needs a fixed time of flight")
    return AngularChart(ctx, tof)
