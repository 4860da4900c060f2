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
from typing import Any, Final

import numpy as np

from ..core.abstractions import Matrix, Vector
from ..core.errors import InvalidElementsError

EARTH_MU: Final[float] = 398600.4418

_SYMPLECTIC_FORM: Final[Matrix] = np.block(
    [
        [np.zeros((3, 3)), np.eye(3)],
        [-np.eye(3), np.zeros((3, 3))],
    ]
)


@dataclass(frozen=True)
class GravModel:
    mu: float = field(default=EARTH_MU)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mu) and self.mu > 0):
            raise InvalidElementsError(
                f"Gravitational parameter must be positive, got {self.mu}"
            )


@dataclass(frozen=True)
class PropagatorSettings:
    method: str = field(default="DOP853")
    rtol: float = field(default=1e-12)
    atol: float = field(default=1e-12)

    def __post_init__(self) -> None:
        if self.rtol <= 0 or self.atol <= 0:
            raise InvalidElementsError("Integrator tolerances must be > 0")


@dataclass(frozen=True)
class ClassicalElements:
    a: float = field()
    e: float = field()
    i: float = field(default=0.0)
    raan: float = field(default=0.0)
    argp: float = field(default=0.0)
    m0: float = field(default=0.0)

    def __post_init__(self) -> None:
        values = (self.a, self.e, self.i, self.raan, self.argp, self.m0)
        if not all(math.isfinite(v) for v in values):
            raise InvalidElementsError(f"Non-finite orbital element in {self}")
        if self.a <= 0:
            raise InvalidElementsError(
                f"Only elliptic orbits are supported (a={self.a})"
            )
        if not 0.0 <= self.e < 1.0:
            raise InvalidElementsError(
                f"Eccentricity must lie in [0, 1), got {self.e}"
            )

    @classmethod
    def from_degrees(
        cls,
        a: float,
        e: float,
        i: float = 0.0,
        raan: float = 0.0,
        argp: float = 0.0,
        m0: float = 0.0,
    ) -> "ClassicalElements":
        return cls(
            a=a,
            e=e,
            i=math.radians(i),
            raan=math.radians(raan),
            argp=math.radians(argp),
            m0=math.radians(m0),
        )

    def with_changes(self, **changes: Any) -> "ClassicalElements":
        return replace(self, **changes)


@dataclass(frozen=True, eq=False)
class CartesianState:
    r: Vector = field()
    v: Vector = field()

    def __post_init__(self) -> None:
        r = np.asarray(self.r, dtype=float).reshape(3)
        v = np.asarray(self.v, dtype=float).reshape(3)
        if not np.linalg.norm(r) > 0:
            raise InvalidElementsError("Position vector must be non-zero")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "v", v)

    @property
    def radius(self) -> float:
        return float(np.linalg.norm(self.r))

    def energy(self, g: GravModel) -> float:
        return float(self.v @ self.v) / 2.0 - g.mu / self.radius

    def angular_momentum(self) -> Vector:
        return np.cross(self.r, self.v)

    def as_vector(self) -> Vector:
        return np.concatenate((self.r, self.v))

    def __repr__(self) -> str:
        return "<CartesianState r={} v={}>".format(
            np.array2string(self.r), np.array2string(self.v)
        )


@dataclass(frozen=True, eq=False)
class Stm:
    phi: Matrix = field()

    def __post_init__(self) -> None:
        phi = np.asarray(self.phi, dtype=float)
        if phi.shape != (6, 6):
            raise ValueError(f"STM must be 6x6, got {phi.shape}")
        object.__setattr__(self, "phi", phi)

    @classmethod
    def identity(cls) -> "Stm":
        return cls(np.eye(6))

    @property
    def rr(self) -> Matrix:
        return self.phi[:3, :3]

    @property
    def rv(self) -> Matrix:
        return self.phi[:3, 3:]

    @property
    def vr(self) -> Matrix:
        return self.phi[3:, :3]

    @property
    def vv(self) -> Matrix:
        return self.phi[3:, 3:]

    def normalized(self, length: float, time: float) -> "Stm":
        scale = np.concatenate((np.full(3, length), np.full(3, length / time)))
        return Stm(self.phi * scale[np.newaxis, :] / scale[:, np.newaxis])

    def symplectic_defect(self, length: float, time: float) -> float:
        phi = self.normalized(length, time).phi
        defect = phi.T @ _SYMPLECTIC_FORM @ phi - _SYMPLECTIC_FORM
        return float(np.max(np.abs(defect)))
