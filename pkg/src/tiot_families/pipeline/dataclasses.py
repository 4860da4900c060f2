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
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Final, Optional

from ..atlas import Atlas, BurnReport
from ..continuation import Family
from ..lambert import BranchFlag
from ..porkchop import PorkchopGrid, Timeline, TimelineEvent
from ..seeds import Seed


class Stage(Enum):
    SEEDS = "seeds"
    TRACE = "trace"
    ANALYZE = "analyze"
    ATLAS = "atlas"
    PORKCHOP = "porkchop"
    PROJECT = "project"

    @classmethod
    def parse(cls, value: str) -> "Stage":
        try:
            return cls(value.strip().lower())
        except ValueError as error:
            raise ValueError(f"Unknown pipeline stage: {value}") from error

    @property
    def requires(self) -> tuple["Stage", ...]:
        return _REQUIREMENTS[self]


_REQUIREMENTS: Final[dict[Stage, tuple[Stage, ...]]] = {
    Stage.SEEDS: (),
    Stage.TRACE: (Stage.SEEDS,),
    Stage.ANALYZE: (Stage.TRACE,),
    Stage.ATLAS: (Stage.TRACE,),
    Stage.PORKCHOP: (),
    Stage.PROJECT: (Stage.ATLAS,),
}
ALL_STAGES: Final[tuple[Stage, ...]] = tuple(Stage)


def resolve_stages(requested: Iterable[Stage | str]) -> tuple[Stage, ...]:
    """Requested stages plus everything they need, in pipeline order."""
    pending = [
        s if isinstance(s, Stage) else Stage.parse(s) for s in requested
    ]
    selected: set[Stage] = set()
    while pending:
        stage = pending.pop()
        if stage not in selected:
            selected.add(stage)
            pending.extend(stage.requires)
    return tuple(s for s in ALL_STAGES if s in selected)


class StageStatus(Enum):
    COMPLETED = "completed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class StageRecord:
    stage: str = field()
    status: StageStatus = field()
    counts: dict[str, int] = field(default_factory=dict)
    wall_time: float = field(default=0.0)
    error: Optional[str] = field(default=None)


@dataclass(frozen=True)
class RunManifest:
    scenario: str = field()
    scenario_sha256: str = field()
    config: dict[str, Any] = field(repr=False)
    stages: tuple[StageRecord, ...] = field()
    artifacts: tuple[str, ...] = field(default_factory=tuple)

    @property
    def failed_stage(self) -> Optional[str]:
        for record in self.stages:
            if record.status is StageStatus.FAILED:
                return record.stage
        return None

    @property
    def completed(self) -> bool:
        return all(r.status is StageStatus.COMPLETED for r in self.stages)

    def record(self, stage: Stage | str) -> StageRecord:
        name = stage.value if isinstance(stage, Stage) else stage
        for candidate in self.stages:
            if candidate.stage == name:
                return candidate
        raise KeyError(name)


@dataclass
class BranchResults:
    """Mutable per-branch state handed from stage to stage."""

    d1: BranchFlag
    seeds: list[Seed] = field(default_factory=list)
    families: list[Family] = field(default_factory=list)
    atlas: Optional[Atlas] = None
    burns: dict[int, tuple[BurnReport, ...]] = field(default_factory=dict)
    grid: Optional[PorkchopGrid] = None
    timeline: Optional[Timeline] = None
    events: list[TimelineEvent] = field(default_factory=list)


@dataclass(frozen=True)
class PipelineResult:
    manifest: RunManifest = field()
    branches: tuple[BranchResults, ...] = field(repr=False)

    def branch(self, d1: BranchFlag) -> BranchResults:
        for results in self.branches:
            if results.d1 is d1:
                return results
        raise KeyError(d1)


@dataclass(frozen=True)
class SweepRun:
    value: float = field()
    result: Optional[PipelineResult] = field(repr=False)
    error: Optional[str] = field(default=None)


@dataclass(frozen=True)
class SweepResult:
    element: str = field()
    runs: tuple[SweepRun, ...] = field()
    report: dict[str, Any] = field(repr=False)
