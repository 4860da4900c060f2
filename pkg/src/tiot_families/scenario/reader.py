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
from collections.abc import Callable, Mapping, Sequence
from dataclasses import fields
from os import PathLike
from pathlib import Path
from typing import Any, Final, Optional, TypeVar

from packaging.version import InvalidVersion, Version
from pdm_pfsc.logging import logger, traced_function

from ..atlas import AtlasSettings
from ..continuation import ContinuationConfig
from ..core.compat import load_toml, loads_toml
from ..core.errors import ScenarioError
from ..cost import DEFAULT_TIME_SCALE, DerivDomain, DesignPoint
from ..kepler import EARTH_MU, ClassicalElements, GravModel
from ..lambert import BranchFlag
from ..seeds import ManualSeed, SeedOrigin, SeedSettings
from .dataclasses import (
    ELEMENT_NAMES,
    ORBIT_SIDES,
    AnalysisSettings,
    PorkchopSettings,
    ScenarioFile,
    SweepSettings,
    branches_name,
    parse_branches,
)

CURRENT_SCHEMA: Final[str] = "1.0"

_T = TypeVar("_T")
_TOP_LEVEL: Final[frozenset[str]] = frozenset(
    (
        "schema_version",
        "name",
        "mu",
        "branches",
        "domain",
        "time_scale",
        "continuation",
        "seeds",
        "porkchop",
        "analysis",
        "atlas",
        "sweep",
        *ORBIT_SIDES,
    )
)
_SEED_KEYS: Final[frozenset[str]] = frozenset(
    (
        "grid_n",
        "t_seed",
        "t_zero",
        "grid_resolution",
        "window",
        "tof_planes",
        "sources",
        "manual",
    )
)
_ATLAS_KEYS: Final[frozenset[str]] = frozenset(
    ("angle_tol", "tof_rel_tol", "label_tol", "dedup_tol", "min_overlap")
)
_ANALYSIS_KEYS: Final[frozenset[str]] = frozenset(
    ("pvt_samples", "pvt_tol", "require_pvt", "elliptic_only")
)


class SchemaVersion(tuple[int, int]):
    @classmethod
    def parse(cls, value: str) -> "SchemaVersion":
        try:
            version = Version(value)
        except InvalidVersion as error:
            logger.error("Scenario schema version is invalid: %s", value)
            raise ScenarioError(
                f"Invalid scenario schema version '{value}'"
            ) from error

        return cls((version.major, version.minor))

    @property
    def supported(self) -> bool:
        return (1, 0) <= self < (2, 0)


def _check_keys(
    table: Mapping[str, Any], allowed: frozenset[str], where: str
) -> None:
    unknown = sorted(set(table) - allowed)
    if unknown:
        logger.error("Unknown keys in [%s]: %s", where, unknown)
        raise ScenarioError(f"Unknown keys in [{where}]: {unknown}")


def _table(data: Mapping[str, Any], key: str) -> Mapping[str, Any]:
    value = data.get(key, {})
    if not isinstance(value, Mapping):
        logger.error("Scenario entry '%s' must be a table", key)
        raise ScenarioError(f"Scenario entry '{key}' must be a table")
    return value


def _tuple(
    value: Optional[Sequence[Any]], length: Optional[int] = None
) -> Optional[tuple[float, ...]]:
    if value is None:
        return None
    items = tuple(float(v) for v in value)
    if length is not None and len(items) != length:
        raise ValueError(f"Expected {length} values, got {list(value)}")
    return items


def _float(where: str, key: str, value: Any) -> float:
    try:
        return float(value)
    except (TypeError, ValueError) as error:
        logger.error("Entry '%s' in [%s] is not a number", key, where)
        raise ScenarioError(
            f"Entry '{key}' in [{where}] is not a number: {value!r}"
        ) from error


def _build(factory: Callable[..., _T], where: str, **kwargs: Any) -> _T:
    try:
        return factory(**kwargs)
    except (TypeError, ValueError) as error:
        if isinstance(error, ScenarioError):
            raise
        logger.error("Invalid [%s] section: %s", where, error)
        raise ScenarioError(f"Invalid [{where}] section: {error}") from error


class ScenarioReader:
    """Reads TOML scenario files. Angles are degrees on disk and radians
    in memory."""

    def __init__(self, path: PathLike | str) -> None:
        self.__path: Path = Path(path)

    @property
    def path(self) -> Path:
        return self.__path

    @traced_function
    def read(self) -> ScenarioFile:
        logger.debug("Reading %s", self.__path)
        try:
            with self.__path.open("rb") as file:
                data: Mapping[str, Any] = load_toml(file)
        except OSError as error:
            logger.error("Cannot open scenario %s: %s", self.__path, error)
            raise ScenarioError(
                f"Cannot open scenario {self.__path}: {error}"
            ) from error
        except ValueError as error:
            logger.error("Scenario %s is not TOML: %s", self.__path, error)
            raise ScenarioError(
                f"Scenario {self.__path} is not valid TOML: {error}"
            ) from error

        scenario = self.parse(data)
        if scenario.name == "scenario":
            scenario = scenario.with_changes(name=self.__path.stem)
        return scenario

    @traced_function
    def parse(self, data: Mapping[str, Any]) -> ScenarioFile:
        version: str = str(data.get("schema_version", ""))
        logger.debug("Found scenario schema version: %s", version)
        if not SchemaVersion.parse(version).supported:
            logger.error("Scenario schema version is unsupported: %s", version)
            raise ScenarioError(
                "Scenario files must use a schema version of at least 1.0"
                " and less than 2.0"
            )
        _check_keys(data, _TOP_LEVEL, "scenario")

        mu = _float("scenario", "mu", data.get("mu", EARTH_MU))
        gravity = _build(GravModel, "scenario", mu=mu)
        try:
            branches = parse_branches(str(data.get("branches", "long")))
            domain = DerivDomain.parse(str(data.get("domain", "temporal")))
        except ValueError as error:
            logger.error("Invalid scenario option: %s", error)
            raise ScenarioError(str(error)) from error

        analysis = _table(data, "analysis")
        _check_keys(analysis, _ANALYSIS_KEYS, "analysis")
        return _build(
            ScenarioFile,
            "scenario",
            departure=ScenarioReader.__elements(data, "departure"),
            arrival=ScenarioReader.__elements(data, "arrival"),
            gravity=gravity,
            branches=branches,
            domain=domain,
            time_scale=_float(
                "scenario",
                "time_scale",
                data.get("time_scale", DEFAULT_TIME_SCALE),
            ),
            continuation=ScenarioReader.__continuation(data),
            seeds=ScenarioReader.__seeds(data),
            porkchop=ScenarioReader.__porkchop(data),
            analysis=_build(
                AnalysisSettings,
                "analysis",
                **{
                    k: v
                    for k, v in analysis.items()
                    if k in ("pvt_samples", "pvt_tol")
                },
            ),
            atlas=ScenarioReader.__atlas(data, analysis),
            sweep=ScenarioReader.__sweep(data),
            name=str(data.get("name", "scenario")),
        )

    @staticmethod
    def __elements(data: Mapping[str, Any], side: str) -> ClassicalElements:
        table = _table(data, side)
        _check_keys(table, frozenset(ELEMENT_NAMES), side)
        if "a" not in table or "e" not in table:
            logger.error("Orbit [%s] needs at least 'a' and 'e'", side)
            raise ScenarioError(f"Orbit [{side}] needs at least 'a' and 'e'")
        return _build(
            ClassicalElements.from_degrees,
            side,
            **{k: _float(side, k, v) for k, v in table.items()},
        )

    @staticmethod
    def __continuation(data: Mapping[str, Any]) -> ContinuationConfig:
        table = _table(data, "continuation")
        allowed = frozenset(f.name for f in fields(ContinuationConfig))
        _check_keys(table, allowed, "continuation")
        return _build(ContinuationConfig, "continuation", **table)

    @staticmethod
    def __seeds(data: Mapping[str, Any]) -> SeedSettings:
        table = dict(_table(data, "seeds"))
        _check_keys(table, _SEED_KEYS, "seeds")
        try:
            if "grid_resolution" in table:
                table["grid_resolution"] = tuple(
                    int(v) for v in table["grid_resolution"]
                )
            if "window" in table:
                table["window"] = _tuple(table["window"], 4)
            if "tof_planes" in table:
                table["tof_planes"] = _tuple(table["tof_planes"])
            if "sources" in table:
                table["sources"] = frozenset(
                    SeedOrigin.parse(str(s)) for s in table["sources"]
                )
            table["manual"] = tuple(
                ManualSeed(
                    x=DesignPoint(
                        math.radians(float(entry["m1"])),
                        math.radians(float(entry["m2"])),
                        float(entry["tof"]),
                    ),
                    branch=BranchFlag.parse(str(entry.get("branch", "long"))),
                )
                for entry in table.get("manual", ())
            )
        except (KeyError, TypeError, ValueError) as error:
            logger.error("Invalid [seeds] section: %s", error)
            raise ScenarioError(f"Invalid [seeds] section: {error}") from error
        return _build(SeedSettings, "seeds", **table)

    @staticmethod
    def __porkchop(data: Mapping[str, Any]) -> PorkchopSettings:
        table = dict(_table(data, "porkchop"))
        _check_keys(
            table, frozenset(("resolution", "window", "horizon")), "porkchop"
        )
        try:
            if "resolution" in table:
                table["resolution"] = tuple(
                    int(v) for v in table["resolution"]
                )
            if "window" in table:
                table["window"] = _tuple(table["window"], 4)
            if "horizon" in table:
                table["horizon"] = float(table["horizon"])
        except (TypeError, ValueError) as error:
            logger.error("Invalid [porkchop] section: %s", error)
            raise ScenarioError(
                f"Invalid [porkchop] section: {error}"
            ) from error
        return _build(PorkchopSettings, "porkchop", **table)

    @staticmethod
    def __atlas(
        data: Mapping[str, Any], analysis: Mapping[str, Any]
    ) -> AtlasSettings:
        table = _table(data, "atlas")
        _check_keys(table, _ATLAS_KEYS, "atlas")
        flags = {
            k: bool(v)
            for k, v in analysis.items()
            if k in ("require_pvt", "elliptic_only")
        }
        return _build(AtlasSettings, "atlas", **table, **flags)

    @staticmethod
    def __sweep(data: Mapping[str, Any]) -> Optional[SweepSettings]:
        table = _table(data, "sweep")
        _check_keys(table, frozenset(("element", "values")), "sweep")
        values = table.get("values", [])
        if not values:
            return None
        try:
            parsed = tuple(float(v) for v in values)
        except (TypeError, ValueError) as error:
            logger.error("Invalid [sweep] values: %s", error)
            raise ScenarioError(f"Invalid [sweep] values: {error}") from error
        return _build(
            SweepSettings,
            "sweep",
            element=str(table.get("element", "")),
            values=parsed,
        )


def _elements_mapping(elements: ClassicalElements) -> dict[str, float]:
    return {
        "a": elements.a,
        "e": elements.e,
        "i": math.degrees(elements.i),
        "raan": math.degrees(elements.raan),
        "argp": math.degrees(elements.argp),
        "m0": math.degrees(elements.m0),
    }


def _optional(mapping: dict[str, Any], key: str, value: Any) -> None:
    if value is not None:
        mapping[key] = list(value) if isinstance(value, tuple) else value


def to_mapping(scenario: ScenarioFile) -> dict[str, Any]:
    """Validated scenario as a TOML-compatible mapping in file units."""
    seeds = scenario.seeds
    seed_table: dict[str, Any] = {
        "grid_n": seeds.grid_n,
        "t_seed": seeds.t_seed,
        "t_zero": seeds.t_zero,
        "grid_resolution": list(seeds.grid_resolution),
        "sources": sorted(origin.symbol for origin in seeds.sources),
        "manual": [
            {
                "m1": math.degrees(entry.x.m1),
                "m2": math.degrees(entry.x.m2),
                "tof": entry.x.tof,
                "branch": entry.branch.value,
            }
            for entry in seeds.manual
        ],
    }
    _optional(seed_table, "window", seeds.window)
    _optional(seed_table, "tof_planes", seeds.tof_planes)

    porkchop: dict[str, Any] = {
        "resolution": list(scenario.porkchop.resolution)
    }
    _optional(porkchop, "window", scenario.porkchop.window)
    _optional(porkchop, "horizon", scenario.porkchop.horizon)

    continuation = {
        f.name: getattr(scenario.continuation, f.name)
        for f in fields(ContinuationConfig)
        if getattr(scenario.continuation, f.name) is not None
    }
    atlas = scenario.atlas
    atlas_table: dict[str, Any] = {
        "angle_tol": atlas.angle_tol,
        "tof_rel_tol": atlas.tof_rel_tol,
        "label_tol": atlas.label_tol,
        "min_overlap": atlas.min_overlap,
    }
    _optional(atlas_table, "dedup_tol", atlas.dedup_tol)

    mapping: dict[str, Any] = {
        "schema_version": CURRENT_SCHEMA,
        "name": scenario.name,
        "mu": scenario.gravity.mu,
        "branches": branches_name(scenario.branches),
        "domain": scenario.domain.value,
        "time_scale": scenario.time_scale,
        "departure": _elements_mapping(scenario.departure),
        "arrival": _elements_mapping(scenario.arrival),
        "continuation": continuation,
        "seeds": seed_table,
        "porkchop": porkchop,
        "analysis": {
            "pvt_samples": scenario.analysis.pvt_samples,
            "pvt_tol": scenario.analysis.pvt_tol,
            "require_pvt": atlas.require_pvt,
            "elliptic_only": atlas.elliptic_only,
        },
        "atlas": atlas_table,
    }
    if scenario.sweep is not None:
        mapping["sweep"] = {
            "element": scenario.sweep.element,
            "values": list(scenario.sweep.values),
        }
    return mapping


def read_scenario(path: PathLike | str) -> ScenarioFile:
    return ScenarioReader(path).read()


def loads_scenario(text: str, name: str = "scenario") -> ScenarioFile:
    reader = ScenarioReader(f"{name}.toml")
    try:
        data = loads_toml(text)
    except ValueError as error:
        logger.error("Scenario text is not TOML: %s", error)
        raise ScenarioError(f"Scenario is not valid TOML: {error}") from error
    scenario = reader.parse(data)
    if "name" not in data:
        scenario = scenario.with_changes(name=name)
    return scenario
