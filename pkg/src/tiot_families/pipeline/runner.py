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
import hashlib
import json
import time
from collections import Counter
from collections.abc import Callable, Iterable
from pathlib import Path
from typing import Final, Optional

from pdm_pfsc.logging import logger, traced_function

from ..atlas import build_atlas, burn_decomposition
from ..continuation import Family, trace_family
from ..core.concurrency import map_ordered
from ..core.errors import StageError, TiotError
from ..cost import ScenarioContext
from ..export import (
    EventCsvExporter,
    ExporterBase,
    FamilyCsvExporter,
    JsonExporter,
    PorkchopCsvExporter,
    SeedCsvExporter,
    atlas_payload,
    family_rows,
)
from ..porkchop import intersect_families, porkchop_grid, time_line
from ..pvt import annotate_family, pvt_interval_violations
from ..scenario import ScenarioFile, to_mapping
from ..seeds import Seed, collect_seeds
from .dataclasses import (
    ALL_STAGES,
    BranchResults,
    PipelineResult,
    RunManifest,
    Stage,
    StageRecord,
    StageStatus,
    resolve_stages,
)

_STAGE_ERRORS: Final[tuple[type[BaseException], ...]] = (
    TiotError,
    ValueError,
    ArithmeticError,
    KeyError,
)

_Counts = dict[str, int]
_Handler = Callable[[ScenarioContext, BranchResults], _Counts]


def scenario_digest(scenario: ScenarioFile) -> str:
    """SHA-256 of the canonical JSON form of the validated scenario."""
    canonical = json.dumps(
        to_mapping(scenario), sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class PipelineRunner:
    def __init__(
        self,
        scenario: ScenarioFile,
        out_dir: Optional[Path] = None,
        stages: Iterable[Stage | str] = ALL_STAGES,
        workers: int = 1,
    ) -> None:
        self.__scenario = scenario
        self.__out_dir = out_dir
        self.__stages = resolve_stages(stages)
        self.__workers = max(1, workers)
        self.__results = tuple(BranchResults(d1) for d1 in scenario.branches)

    @property
    def stages(self) -> tuple[Stage, ...]:
        return self.__stages

    @traced_function
    def run(self) -> PipelineResult:
        handlers: dict[Stage, _Handler] = {
            Stage.SEEDS: self.__seeds,
            Stage.TRACE: self.__trace,
            Stage.ANALYZE: self.__analyze,
            Stage.ATLAS: self.__atlas,
            Stage.PORKCHOP: self.__porkchop,
            Stage.PROJECT: self.__project,
        }
        records: list[StageRecord] = []
        failed = False
        for stage in self.__stages:
            if failed:
                records.append(StageRecord(stage.value, StageStatus.SKIPPED))
                continue
            record = self.__run_stage(stage, handlers[stage])
            records.append(record)
            failed = record.status is StageStatus.FAILED

        artifacts = self.__write_artifacts()
        manifest = RunManifest(
            scenario=self.__scenario.name,
            scenario_sha256=scenario_digest(self.__scenario),
            config=to_mapping(self.__scenario),
            stages=tuple(records),
            artifacts=tuple(artifacts),
        )
        if self.__out_dir is not None:
            JsonExporter(manifest, "manifest").write(self.__out_dir)
        return PipelineResult(manifest=manifest, branches=self.__results)

    def __run_stage(
        self,
        stage: Stage,
        handler: _Handler,
    ) -> StageRecord:
        started = time.perf_counter()
        counts: Counter[str] = Counter()
        try:
            for results in self.__results:
                ctx = self.__scenario.context(results.d1)
                counts.update(handler(ctx, results))
        except _STAGE_ERRORS as cause:
            error = StageError(stage.value, cause)
            logger.error("%s", error.message)
            return StageRecord(
                stage.value,
                StageStatus.FAILED,
                dict(sorted(counts.items())),
                time.perf_counter() - started,
                error.message,
            )

        elapsed = time.perf_counter() - started
        logger.info(
            "Stage %s finished in %.1f s: %s",
            stage.value,
            elapsed,
            dict(sorted(counts.items())),
        )
        return StageRecord(
            stage.value,
            StageStatus.COMPLETED,
            dict(sorted(counts.items())),
            elapsed,
        )

    def __seeds(self, ctx: ScenarioContext, results: BranchResults) -> _Counts:
        scenario = self.__scenario
        results.seeds = collect_seeds(
            ctx,
            scenario.domain,
            scenario.seeds,
            scenario.continuation,
            self.__workers,
        )
        counts = Counter({"seeds": len(results.seeds)})
        counts.update(
            f"seeds_{seed.label.hclass.value}" for seed in results.seeds
        )
        counts.update(
            f"seeds_{seed.label.origin.value}" for seed in results.seeds
        )
        return dict(counts)

    def __trace(self, ctx: ScenarioContext, results: BranchResults) -> _Counts:
        scenario = self.__scenario

        def _trace(seed: Seed) -> Optional[Family]:
            try:
                return trace_family(
                    seed.x,
                    ctx,
                    scenario.domain,
                    scenario.continuation,
                    seed.seed_id,
                )
            except TiotError as error:
                logger.warning("Seed %s not traced: %s", seed.seed_id, error)
                return None

        traced = map_ordered(_trace, results.seeds, self.__workers)
        results.families = [f for f in traced if f is not None]
        return {
            "families": len(results.families),
            "trace_failures": len(traced) - len(results.families),
            "cycles": sum(1 for f in results.families if f.is_cycle),
        }

    def __analyze(
        self, ctx: ScenarioContext, results: BranchResults
    ) -> _Counts:
        analysis = self.__scenario.analysis
        results.families = [
            annotate_family(
                family,
                ctx,
                analysis.pvt_samples,
                analysis.pvt_tol,
                self.__workers,
            )
            for family in results.families
        ]
        members = [m for f in results.families for m in f.members]
        return {
            "pvt_checked": sum(1 for m in members if m.pvt_ok is not None),
            "pvt_passed": sum(1 for m in members if m.pvt_ok is True),
            "pvt_isolated": sum(
                len(pvt_interval_violations(f)) for f in results.families
            ),
        }

    def __atlas(self, ctx: ScenarioContext, results: BranchResults) -> _Counts:
        scenario = self.__scenario
        atlas = build_atlas(
            results.families,
            results.seeds,
            ctx,
            scenario.continuation,
            scenario.atlas,
        )
        results.atlas = atlas
        results.burns = {
            entry.index: tuple(
                burn_decomposition(member, ctx)
                for member in entry.min_j_members
            )
            for entry in atlas
        }
        return {
            "atlas_families": len(atlas),
            "duplicates_dropped": atlas.dropped_duplicates,
            "components": len(atlas.components),
            "connections": sum(len(e.connections) for e in atlas) // 2,
        }

    def __porkchop(
        self, ctx: ScenarioContext, results: BranchResults
    ) -> _Counts:
        settings = self.__scenario.porkchop
        results.grid = porkchop_grid(
            ctx, settings.window, settings.resolution, self.__workers
        )
        return {
            "porkchop_cells": results.grid.j.size,
            "porkchop_failures": results.grid.failures,
        }

    def __project(
        self, ctx: ScenarioContext, results: BranchResults
    ) -> _Counts:
        t_range = self.__scenario.porkchop.time_range(ctx)
        results.timeline = time_line(ctx, t_range)
        pvt_samples = (
            self.__scenario.analysis.pvt_samples
            if Stage.ANALYZE in self.__stages
            else None
        )
        entries = results.atlas.entries if results.atlas is not None else ()
        results.events = intersect_families(
            entries, ctx, t_range, pvt_samples
        )
        return {
            "timeline_segments": len(results.timeline),
            "events": len(results.events),
        }

    def __exporters(self, results: BranchResults) -> list[ExporterBase]:
        exporters: list[ExporterBase] = []
        if Stage.SEEDS in self.__stages:
            exporters.append(SeedCsvExporter(results.seeds, "seeds"))
        if results.atlas is not None:
            named = [
                (entry.index, entry.family) for entry in results.atlas
            ]
            exporters.append(
                JsonExporter(
                    atlas_payload(results.atlas, results.burns), "atlas"
                )
            )
        else:
            named = list(enumerate(results.families, start=1))
        for index, family in named:
            exporters.append(
                FamilyCsvExporter(
                    family_rows(family), f"families/family_{index:03d}"
                )
            )
        if results.grid is not None:
            exporters.append(PorkchopCsvExporter(results.grid, "porkchop"))
        if Stage.PROJECT in self.__stages and results.timeline is not None:
            exporters.append(EventCsvExporter(results.events, "events"))
        return exporters

    def __write_artifacts(self) -> list[str]:
        if self.__out_dir is None:
            return []
        written = []
        for results in self.__results:
            directory = self.__out_dir / results.d1.value
            for exporter in self.__exporters(results):
                path = exporter.write(directory)
                written.append(path.relative_to(self.__out_dir).as_posix())
        logger.info("Wrote %s artifacts to %s", len(written), self.__out_dir)
        return written


def run_pipeline(
    scenario: ScenarioFile,
    stages: Iterable[Stage | str] = ALL_STAGES,
    out_dir: Optional[Path] = None,
    workers: int = 1,
) -> PipelineResult:
    return PipelineRunner(scenario, out_dir, stages, workers).run()
