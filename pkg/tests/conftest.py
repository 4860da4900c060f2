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
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from tiot_families.core.errors import TiotError
from tiot_families.continuation import FamilyMember
from tiot_families.cost import (
    DesignPoint,
    ScenarioContext,
    StationaryClass,
    evaluate_cost,
    transfer_arc,
)
from tiot_families.kepler import ClassicalElements, orbital_period
from tiot_families.pipeline import ALL_STAGES, PipelineResult, run_pipeline
from tiot_families.scenario import read_scenario

SCENARIO_DIR = Path(__file__).parent.parent / "scenarios"

BASELINE_DEPARTURE = ClassicalElements.from_degrees(
    a=10032.119106, e=0.1, i=0.0, raan=0.0, argp=0.0, m0=0.0
)
BASELINE_ARRIVAL = ClassicalElements.from_degrees(
    a=8016.300507, e=0.1, i=30.0, raan=45.0, argp=90.0, m0=60.0
)


@pytest.fixture
def baseline_ctx() -> ScenarioContext:
    return ScenarioContext(BASELINE_DEPARTURE, BASELINE_ARRIVAL)


@pytest.fixture
def coplanar_circular_ctx() -> ScenarioContext:
    return ScenarioContext(
        ClassicalElements.from_degrees(a=7000.0, e=0.0),
        ClassicalElements.from_degrees(a=9000.0, e=0.0, argp=20.0),
    )


@pytest.fixture
def coplanar_elliptic_ctx() -> ScenarioContext:
    return ScenarioContext(
        ClassicalElements.from_degrees(a=9000.0, e=0.15, argp=10.0),
        ClassicalElements.from_degrees(a=12000.0, e=0.2, argp=130.0, m0=40.0),
    )


@pytest.fixture(
    params=["baseline", "coplanar_circular", "coplanar_elliptic"]
)
def any_ctx(request: pytest.FixtureRequest) -> ScenarioContext:
    return request.getfixturevalue(f"{request.param}_ctx")


@pytest.fixture
def baseline_toml() -> Path:
    return SCENARIO_DIR / "baseline.toml"


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


DesignSampler = Callable[[ScenarioContext, int], list[DesignPoint]]


@pytest.fixture
def design_points(rng: np.random.Generator) -> DesignSampler:
    """Random design points away from collinear and 180 degree transfers."""

    def _sample(ctx: ScenarioContext, count: int) -> list[DesignPoint]:
        period = orbital_period(ctx.arr, ctx.g)
        points: list[DesignPoint] = []
        while len(points) < count:
            x = DesignPoint(
                float(rng.uniform(0.0, 2.0 * np.pi)),
                float(rng.uniform(0.0, 2.0 * np.pi)),
                float(rng.uniform(0.3, 1.2) * period),
            )
            try:
                theta = transfer_arc(x, ctx).theta
            except TiotError:
                continue
            if min(abs(theta - np.pi), theta, 2.0 * np.pi - theta) > 0.3:
                points.append(x)
        return points

    return _sample


MemberFactory = Callable[..., FamilyMember]


@pytest.fixture
def make_member(baseline_ctx: ScenarioContext) -> MemberFactory:
    """Members with a real cost evaluation but a prescribed classification."""

    def _make(
        m1: float,
        m2: float,
        tof: float,
        hclass: StationaryClass = StationaryClass.MINIMUM,
        pvt_ok: bool | None = None,
        ctx: ScenarioContext | None = None,
    ) -> FamilyMember:
        x = DesignPoint(m1, m2, tof)
        cost = evaluate_cost(x, ctx or baseline_ctx)
        return FamilyMember(
            x=x,
            cost=cost,
            hclass=hclass,
            theta=cost.theta,
            tangent=np.array([0.0, 0.0, 1.0]),
            eigenvalues=np.ones(2),
            pvt_ok=pvt_ok,
        )

    return _make


QUICK_SCENARIO = """
schema_version = "1.0"
name = "quick"
branches = "long"
domain = "angular"

[departure]
a = 9000.0
e = 0.15
argp = 10.0

[arrival]
a = 12000.0
e = 0.2
argp = 130.0
m0 = 40.0

[seeds]
grid_n = 32
sources = ["zero"]

[porkchop]
resolution = [4, 3]
window = [0.0, 20000.0, 2000.0, 8000.0]
"""


@pytest.fixture
def quick_toml(tmp_path: Path) -> Path:
    """Coplanar scenario whose seed and porkchop stages run in seconds."""
    path = tmp_path / "quick.toml"
    path.write_text(QUICK_SCENARIO, encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def baseline_out(tmp_path_factory: pytest.TempPathFactory) -> Path:
    return tmp_path_factory.mktemp("baseline")


@pytest.fixture(scope="session")
def baseline_run(baseline_out: Path) -> PipelineResult:
    """Full baseline pipeline, run once and shared by the slow tests."""
    scenario = read_scenario(SCENARIO_DIR / "baseline.toml")
    return run_pipeline(scenario, ALL_STAGES, baseline_out, workers=4)
