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
import json
from dataclasses import replace

import pytest

from tiot_families.core.errors import TiotError
from tiot_families.cost import DerivDomain
from tiot_families.lambert import BranchFlag
from tiot_families.pipeline import (
    ALL_STAGES,
    PipelineRunner,
    Stage,
    StageStatus,
    resolve_stages,
    run_pipeline,
    run_summary,
    scenario_digest,
    sweep,
)
from tiot_families.scenario import read_scenario


def test_stages_pull_in_their_prerequisites() -> None:
    assert resolve_stages(["project"]) == (
        Stage.SEEDS,
        Stage.TRACE,
        Stage.ATLAS,
        Stage.PROJECT,
    )
    assert resolve_stages([Stage.PORKCHOP]) == (Stage.PORKCHOP,)
    assert resolve_stages(["analyze", "seeds"]) == (
        Stage.SEEDS,
        Stage.TRACE,
        Stage.ANALYZE,
    )
    assert resolve_stages(ALL_STAGES) == ALL_STAGES
    with pytest.raises(ValueError):
        resolve_stages(["polish"])


def test_scenario_digest_is_stable(quick_toml) -> None:
    first = read_scenario(quick_toml)
    second = read_scenario(quick_toml)
    assert scenario_digest(first) == scenario_digest(second)
    changed = first.with_element("arrival.e", 0.25)
    assert scenario_digest(changed) != scenario_digest(first)


def test_porkchop_run_writes_artifacts(quick_toml, tmp_path) -> None:
    out = tmp_path / "out"
    result = run_pipeline(read_scenario(quick_toml), ["porkchop"], out)

    manifest = result.manifest
    assert manifest.completed
    assert manifest.failed_stage is None
    assert manifest.artifacts == ("long/porkchop.csv",)
    record = manifest.record(Stage.PORKCHOP)
    assert record.status is StageStatus.COMPLETED
    assert record.counts["porkchop_cells"] == 12

    lines = (out / "long" / "porkchop.csv").read_text().splitlines()
    assert len(lines) == 13
    written = json.loads((out / "manifest.json").read_text())
    assert written["scenario"] == "quick"
    assert written["stages"][0]["status"] == "completed"
    assert written["scenario_sha256"] == manifest.scenario_sha256


def test_porkchop_artifacts_are_deterministic(quick_toml, tmp_path) -> None:
    scenario = read_scenario(quick_toml)
    run_pipeline(scenario, ["porkchop"], tmp_path / "a")
    run_pipeline(scenario, ["porkchop"], tmp_path / "b")
    first = (tmp_path / "a" / "long" / "porkchop.csv").read_bytes()
    second = (tmp_path / "b" / "long" / "porkchop.csv").read_bytes()
    assert first == second


def test_failed_stage_skips_the_rest(quick_toml, monkeypatch) -> None:
    def _broken(*_, **__):
        raise TiotError("no seeds today")

    monkeypatch.setattr(
        "tiot_families.pipeline.runner.collect_seeds", _broken
    )
    result = run_pipeline(read_scenario(quick_toml), ["seeds", "porkchop"])

    manifest = result.manifest
    assert manifest.failed_stage == "seeds"
    assert not manifest.completed
    assert "no seeds today" in manifest.record("seeds").error
    assert manifest.record("porkchop").status is StageStatus.SKIPPED
    assert result.branch(BranchFlag.LONG).grid is None


def test_seed_stage_on_the_long_branch(quick_toml, tmp_path) -> None:
    runner = PipelineRunner(
        read_scenario(quick_toml), tmp_path / "out", ["seeds"]
    )
    result = runner.run()

    assert runner.stages == (Stage.SEEDS,)
    seeds = result.branch(BranchFlag.LONG).seeds
    record = result.manifest.record("seeds")
    assert len(seeds) == 4
    assert record.counts["seeds"] == 4
    assert record.counts["seeds_asymptote_zero"] == 4
    assert all(seed.anchor is not None for seed in seeds)
    header = (tmp_path / "out" / "long" / "seeds.csv").read_text()
    assert header.startswith("seed_id,origin,branch,class,index")


def test_run_summary_without_atlas(quick_toml) -> None:
    result = run_pipeline(read_scenario(quick_toml), ["porkchop"])
    assert run_summary(result) == {
        "families": 0,
        "cycles": 0,
        "end_labels": {},
        "min_j": None,
        "failed_stage": None,
    }


def test_sweep_isolates_rejected_values(quick_toml, tmp_path) -> None:
    result = sweep(
        read_scenario(quick_toml),
        "arrival.e",
        (0.2, 1.5, 0.3),
        ["porkchop"],
        tmp_path,
    )

    assert [run.value for run in result.runs] == [0.2, 1.5, 0.3]
    assert result.runs[1].result is None
    assert result.runs[1].error
    assert (tmp_path / "sweep" / "arrival.e=0.2" / "manifest.json").exists()
    assert (tmp_path / "sweep" / "arrival.e=0.3" / "manifest.json").exists()

    report = json.loads((tmp_path / "sweep_report.json").read_text())
    assert report["element"] == "arrival.e"
    assert [entry["value"] for entry in report["values"]] == [0.2, 1.5, 0.3]
    assert "error" in report["values"][1]
    (change,) = report["changes"]
    assert change["from"] == 0.2
    assert change["to"] == 0.3
    assert change["families"] == 0


@pytest.mark.slow
def test_baseline_end_to_end(baseline_run, baseline_out) -> None:
    assert baseline_run.manifest.completed
    branch = baseline_run.branch(BranchFlag.LONG)
    assert branch.seeds
    assert branch.atlas is not None and len(branch.atlas.entries) > 0
    for entry in branch.atlas:
        costs = [m.j for m in entry.min_j_members]
        assert costs == sorted(costs)
        assert all(m in entry.family.members for m in entry.min_j_members)
    assert (baseline_out / "long" / "atlas.json").exists()
    assert (baseline_out / "long" / "events.csv").exists()
    assert list((baseline_out / "long" / "families").glob("family_*.csv"))


@pytest.mark.slow
def test_cycles_appear_only_in_the_temporal_domain(
    baseline_run, baseline_toml
) -> None:
    temporal = baseline_run.branch(BranchFlag.LONG).families
    assert any(family.is_cycle for family in temporal)

    scenario = read_scenario(baseline_toml)
    angular = run_pipeline(
        replace(scenario, domain=DerivDomain.ANGULAR), ["trace"], workers=4
    )
    families = angular.branch(BranchFlag.LONG).families
    assert families
    assert not any(family.is_cycle for family in families)


@pytest.mark.slow
def test_baseline_atlas_links_families_at_pi(baseline_run) -> None:
    atlas = baseline_run.branch(BranchFlag.LONG).atlas
    assert atlas is not None
    assert any(len(component) >= 2 for component in atlas.components)


def _pi_ends(result) -> int:
    atlas = result.branch(BranchFlag.LONG).atlas
    return sum(
        1 for entry in atlas for label in entry.end_labels if label.kind.is_pi
    )


@pytest.mark.slow
def test_inclination_sweep_opens_coplanar_cycles(baseline_toml) -> None:
    scenario = read_scenario(baseline_toml.with_name("coplanar_sweep.toml"))
    result = sweep(scenario, "arrival.i", (0.0, 1.0), ["atlas"], workers=4)
    coplanar, inclined = (run.result for run in result.runs)

    coplanar_atlas = coplanar.branch(BranchFlag.LONG).atlas
    assert any(entry.family.is_cycle for entry in coplanar_atlas)
    inclined_atlas = inclined.branch(BranchFlag.LONG).atlas
    assert any(
        not entry.family.is_cycle
        and any(label.kind.is_pi for label in entry.end_labels)
        for entry in inclined_atlas
    )
    assert _pi_ends(inclined) > _pi_ends(coplanar)
