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
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Final, Optional, final

from pdm_pfsc.logging import logger

from .core.errors import TiotError
from .cost import DerivDomain
from .export import get_exporters
from .pipeline import (
    ALL_STAGES,
    PipelineResult,
    Stage,
    resolve_stages,
    run_pipeline,
    sweep,
)
from .scenario import ScenarioFile, parse_branches, read_scenario

EXIT_OK: Final[int] = 0
EXIT_STAGE_FAILED: Final[int] = 1
EXIT_BAD_SCENARIO: Final[int] = 2


class CommandBase(ABC):
    name: str
    description: str

    def add_arguments(self, parser: ArgumentParser) -> None:
        exporters = get_exporters()
        parser.add_argument(
            "--scenario",
            "-s",
            dest="scenario",
            action="store",
            required=True,
            help="Scenario file in TOML format.",
        )
        parser.add_argument(
            "--domain",
            dest="domain",
            action="store",
            choices=[d.value for d in DerivDomain],
            help="Override the optimality domain of the scenario.",
        )
        parser.add_argument(
            "--branch",
            dest="branch",
            action="store",
            choices=["short", "long", "both"],
            help="Override the Lambert branches of the scenario.",
        )
        parser.add_argument(
            "--out",
            "-o",
            dest="out",
            action="store",
            default="tiot-out",
            help="Directory receiving all artifacts. Defaults to tiot-out."
            " Written formats are: "
            f"{', '.join([f'{f.name} ({f.description})' for f in exporters])}",
        )
        parser.add_argument(
            "--threads",
            "-j",
            dest="threads",
            action="store",
            type=int,
            default=1,
            help="Worker threads for grids and family tracing.",
        )

    def handle(self, options: Namespace) -> int:
        try:
            scenario = self.load(options)
        except TiotError as error:
            logger.error("%s", error.message)
            return EXIT_BAD_SCENARIO
        return self.execute(scenario, options)

    @staticmethod
    def load(options: Namespace) -> ScenarioFile:
        scenario = read_scenario(options.scenario)
        if options.domain is not None:
            scenario = scenario.with_changes(
                domain=DerivDomain.parse(options.domain)
            )
        if options.branch is not None:
            scenario = scenario.with_changes(
                branches=parse_branches(options.branch)
            )
        return scenario

    @abstractmethod
    def execute(self, scenario: ScenarioFile, options: Namespace) -> int:
        raise NotImplementedError()


def _exit_code(result: PipelineResult) -> int:
    failed = result.manifest.failed_stage
    if failed is None:
        return EXIT_OK
    logger.error("Pipeline aborted in stage %s", failed)
    return EXIT_STAGE_FAILED


class StageCommand(CommandBase):
    """Runs one stage together with the stages it depends on."""

    def __init__(self, stage: Stage, description: str) -> None:
        self.__stage = stage
        self.name = stage.value
        self.description = description

    @property
    def stage(self) -> Stage:
        return self.__stage

    def execute(self, scenario: ScenarioFile, options: Namespace) -> int:
        result = run_pipeline(
            scenario,
            resolve_stages((self.__stage,)),
            Path(options.out),
            options.threads,
        )
        return _exit_code(result)


def _stage_list(value: str) -> tuple[Stage, ...]:
    return tuple(Stage.parse(part) for part in value.split(",") if part)


@final
class RunCommand(CommandBase):
    name: Final[str] = "run"
    description: str = "Run the full pipeline on a scenario"

    def add_arguments(self, parser: ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument(
            "--stages",
            dest="stages",
            action="store",
            type=_stage_list,
            default=ALL_STAGES,
            help="Comma separated stages to run. Defaults to all of "
            f"{', '.join(s.value for s in ALL_STAGES)}.",
        )

    def execute(self, scenario: ScenarioFile, options: Namespace) -> int:
        out = Path(options.out)
        if scenario.sweep is not None:
            logger.info("Scenario carries a sweep over %s", scenario.sweep)
            return SweepCommand.run_sweep(
                scenario,
                scenario.sweep.element,
                scenario.sweep.values,
                options.stages,
                out,
                options.threads,
            )
        result = run_pipeline(scenario, options.stages, out, options.threads)
        return _exit_code(result)


@final
class SweepCommand(CommandBase):
    name: Final[str] = "sweep"
    description: str = "Repeat the pipeline over values of one element"

    def add_arguments(self, parser: ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument(
            "--element",
            dest="element",
            action="store",
            help="Element to sweep such as arrival.i. Defaults to the"
            " [sweep] table of the scenario.",
        )
        parser.add_argument(
            "--values",
            dest="values",
            action="store",
            type=lambda v: tuple(float(p) for p in v.split(",") if p),
            help="Comma separated values in scenario units.",
        )
        parser.add_argument(
            "--stages",
            dest="stages",
            action="store",
            type=_stage_list,
            default=ALL_STAGES,
            help="Comma separated stages to run for every value.",
        )

    def execute(self, scenario: ScenarioFile, options: Namespace) -> int:
        element: Optional[str] = options.element
        values: Optional[tuple[float, ...]] = options.values
        if scenario.sweep is not None:
            element = element or scenario.sweep.element
            values = values or scenario.sweep.values
        if not element or not values:
            logger.error("No sweep element or values given")
            return EXIT_BAD_SCENARIO
        return SweepCommand.run_sweep(
            scenario,
            element,
            values,
            options.stages,
            Path(options.out),
            options.threads,
        )

    @staticmethod
    def run_sweep(
        scenario: ScenarioFile,
        element: str,
        values: tuple[float, ...],
        stages: tuple[Stage, ...],
        out: Path,
        threads: int,
    ) -> int:
        result = sweep(scenario, element, values, stages, out, threads)
        failed = [
            run.value
            for run in result.runs
            if run.result is None
            or run.result.manifest.failed_stage is not None
        ]
        if failed:
            logger.error("Sweep values with failures: %s", failed)
            return EXIT_STAGE_FAILED
        return EXIT_OK


def create_commands() -> list[CommandBase]:
    return [
        StageCommand(Stage.SEEDS, "Find and classify seed solutions"),
        StageCommand(Stage.TRACE, "Trace families from all seeds"),
        StageCommand(Stage.ANALYZE, "Check primer vector conditions"),
        StageCommand(Stage.ATLAS, "Assemble the family atlas"),
        StageCommand(Stage.PORKCHOP, "Evaluate the porkchop cost grid"),
        StageCommand(
            Stage.PROJECT, "Intersect families with departure time-lines"
        ),
        SweepCommand(),
        RunCommand(),
    ]
