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
from collections.abc import Iterator
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from ..continuation import Family, FamilyMember, TerminationReason
from ..lambert import ConicKind
from ..seeds import SeedLabel


class EndpointKind(Enum):
    INF_ASYMPTOTE = "inf_asymptote"
    ZERO_ASYMPTOTE = "zero_asymptote"
    PI1 = "pi1"
    PI2 = "pi2"
    CYCLE = "cycle"
    CAP = "cap"
    UNIDENTIFIED = "unidentified"

    @property
    def is_pi(self) -> bool:
        return self in (EndpointKind.PI1, EndpointKind.PI2)


@dataclass(frozen=True)
class EndpointLabel:
    kind: EndpointKind = field()
    reason: TerminationReason = field()
    seed: Optional[SeedLabel] = field(default=None)

    def __post_init__(self) -> None:
        asymptotic = self.kind in (
            EndpointKind.INF_ASYMPTOTE,
            EndpointKind.ZERO_ASYMPTOTE,
        )
        if asymptotic != (self.seed is not None):
            raise ValueError(
                f"Asymptote endpoints need their seed label: {self.kind}"
            )

    def __str__(self) -> str:
        if self.seed is not None:
            return self.seed.seed_id
        return self.kind.value


@dataclass(frozen=True)
class AtlasSettings:
    angle_tol: float = field(default=0.1)
    tof_rel_tol: float = field(default=0.1)
    label_tol: float = field(default=0.3)
    dedup_tol: Optional[float] = field(default=None)
    min_overlap: int = field(default=10)
    require_pvt: bool = field(default=False)
    elliptic_only: bool = field(default=False)

    def __post_init__(self) -> None:
        tolerances = (self.angle_tol, self.tof_rel_tol, self.label_tol)
        if any(not value > 0 for value in tolerances):
            raise ValueError("Atlas tolerances must be positive")
        if self.dedup_tol is not None and not self.dedup_tol > 0:
            raise ValueError("Dedup tolerance must be positive")
        if self.min_overlap < 1:
            raise ValueError("Overlap threshold must be at least one member")

    def duplicate_tolerance(self, ds: float) -> float:
        return 2.0 * ds if self.dedup_tol is None else self.dedup_tol


@dataclass(frozen=True)
class Connection:
    other: int = field()
    kind: EndpointKind = field()


@dataclass(frozen=True, eq=False)
class AtlasEntry:
    index: int = field()
    family: Family = field(repr=False)
    end_labels: tuple[EndpointLabel, EndpointLabel] = field()
    connections: tuple[Connection, ...] = field(default_factory=tuple)
    min_j_members: tuple[FamilyMember, ...] = field(
        default_factory=tuple, repr=False
    )

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"Atlas indices start at 1, got {self.index}")

    @property
    def connected_indices(self) -> tuple[int, ...]:
        return tuple(sorted({c.other for c in self.connections}))

    def with_connections(
        self, connections: tuple[Connection, ...]
    ) -> "AtlasEntry":
        return replace(self, connections=connections)


@dataclass(frozen=True)
class BurnComponents:
    radial: float = field()
    tangential: float = field()
    normal: float = field()
    magnitude: float = field()


@dataclass(frozen=True)
class BurnReport:
    departure: BurnComponents = field()
    arrival: BurnComponents = field()
    transfer_inclination: float = field()
    conic: ConicKind = field()
    semi_major_axis: float = field()

    @property
    def total(self) -> float:
        return self.departure.magnitude + self.arrival.magnitude


@dataclass(frozen=True, eq=False)
class Atlas:
    entries: tuple[AtlasEntry, ...] = field()
    components: tuple[tuple[int, ...], ...] = field(default_factory=tuple)
    dropped_duplicates: int = field(default=0)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[AtlasEntry]:
        return iter(self.entries)

    def entry(self, index: int) -> AtlasEntry:
        for candidate in self.entries:
            if candidate.index == index:
                return candidate
        raise KeyError(index)
