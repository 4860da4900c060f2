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
from .dataclasses import (
    ALL_STAGES,
    BranchResults,
    PipelineResult,
    RunManifest,
    Stage,
    StageRecord,
    StageStatus,
    SweepResult,
    SweepRun,
    resolve_stages,
)
from .runner import PipelineRunner, run_pipeline, scenario_digest
from .sweep import run_summary, sweep, sweep_report

__all__ = [
    "ALL_STAGES",
    Stage.__name__,
    StageStatus.__name__,
    StageRecord.__name__,
    RunManifest.__name__,
    BranchResults.__name__,
    PipelineResult.__name__,
    SweepRun.__name__,
    SweepResult.__name__,
    PipelineRunner.__name__,
    resolve_stages.__name__,
    run_pipeline.__name__,
    scenario_digest.__name__,
    run_summary.__name__,
    sweep_report.__name__,
    "sweep",
]
