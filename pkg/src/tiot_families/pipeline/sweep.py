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
"""Repeated pipeline runs over one orbital element."""
import math
from collections import Counter
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any, Optional

from pdm_pfsc.logging import logger, traced_function

from ..core.errors import TiotError
from ..export import JsonExporter
from ..scenario import ScenarioFile
from .dataclasses import (
    ALL_STAGES,
    PipelineResult,
    Stage,
    SweepResult,
    SweepRun,
)
from .runner import run_pipeline


def _value_name(element: str, value: float) -> str:
    return f"{element}={value:g}"


def run_summary(result: PipelineResult) -> dict[str, Any]:
    """Family count, endpoint labels and cheapest min-J cost of one run."""
    labels: Counter[str] = Counter()
    families = 0
    cycles = 0
    best = math.inf
    for branch in result.branches:
        if branch.atlas is None:
            families += len(branch.families)
            cycles += sum(1 for f in branch.families if f.is_cycle)
            continue
        for entry in branch.atlas:
            families += 1
            cycles += int(entry.family.is_cycle)
            labels.update(
                f"{branch.d1.symbol}:{label}" for label in entry.end_labels
            )
            best = min([best, *(m.j for m in entry.min_j_members)])
    return {
        "families": families,
        "cycles": cycles,
        "end_labels": dict(sorted(labels.items())),
        "min_j": best if math.isfinite(best) else None,
        "failed_stage": result.manifest.failed_stage,
    }


def _changes(
    before: dict[str, Any], after: dict[str, Any]
) -> dict[str, Any]:
    old: Counter[str] = Counter(before["end_labels"])
    new: Counter[str] = Counter(after["end_labels"])
    min_j_change = None
    if before["min_j"] is not None and after["min_j"] is not None:
        min_j_change = after["min_j"] - before["min_j"]
    return {
        "families": after["families"] - before["families"],
        "cycles": after["cycles"] - before["cycles"],
        "labels_added": dict(sorted((new - old).items())),
        "labels_removed": dict(sorted((old - new).items())),
        "min_j": min_j_change,
    }


def sweep_report(element: str, runs: Sequence[SweepRun]) -> dict[str, Any]:
    values = []
    previous: Optional[tuple[float, dict[str, Any]]] = None
    changes = []
    for run in runs:
        if run.result is None:
            values.append({"value": run.value, "error": run.error})
            continue
        summary = run_summary(run.result)
        values.append({"value": run.value, **summary})
        if previous is not None:
            changes.append(
                {
                    "from": previous[0],
                    "to": run.value,
                    **_changes(previous[1], summary),
                }
            )
        previous = (run.value, summary)
    return {"element": element, "values": values, "changes": changes}


@traced_function
def sweep(
    scenario: ScenarioFile,
    element: str,
    values: Iterable[float],
    stages: Iterable[Stage | str] = ALL_STAGES,
    out_dir: Optional[Path] = None,
    workers: int = 1,
) -> SweepResult:
    stages = tuple(stages)
    runs: list[SweepRun] = []
    for value in values:
        logger.info("Sweep %s", _value_name(element, value))
        try:
            variant = scenario.with_element(element, value)
        except (TiotError, ValueError) as error:
            logger.warning(
                "Sweep value %s rejected: %s",
                _value_name(element, value),
                error,
            )
            runs.append(SweepRun(value, None, str(error)))
            continue
        target = (
            None
            if out_dir is None
            else out_dir / "sweep" / _value_name(element, value)
        )
        runs.append(
            SweepRun(value, run_pipeline(variant, stages, target, workers))
        )

    report = sweep_report(element, runs)
    if out_dir is not None:
        JsonExporter(report, "sweep_report").write(out_dir)
    return SweepResult(element=element, runs=tuple(runs), report=report)
