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
"""CSV artifacts: family members, seed catalog, porkchop grid and
time-line events."""
import csv
from collections.abc import Iterable, Sequence
from typing import IO, Any

from ..cost import DesignPoint, StationaryClass
from ..porkchop import PorkchopGrid, TimelineEvent
from ..seeds import Seed
from .base import CsvExporterBase, format_flag, format_float, parse_flag
from .dataclasses import FamilyRow

FAMILY_COLUMNS = (
    "index",
    "m1",
    "m2",
    "tof",
    "j",
    "class",
    "pvt",
    "theta",
    "tangent_m1",
    "tangent_m2",
    "tangent_tof",
)
EVENT_COLUMNS = (
    "t_dep",
    "tof",
    "family",
    "m1",
    "m2",
    "class",
    "j",
    "residual",
    "pvt",
)


class FamilyCsvExporter(CsvExporterBase[Sequence[FamilyRow]]):
    FORMAT_NAME: str = "family-csv"
    FORMAT_DESCRIPTION: str = "Family members along the arclength"
    COLUMNS = FAMILY_COLUMNS

    def rows(self) -> Iterable[Sequence[Any]]:
        for row in self.data:
            yield (
                row.index,
                format_float(row.x.m1),
                format_float(row.x.m2),
                format_float(row.x.tof),
                format_float(row.j),
                row.hclass.value,
                format_flag(row.pvt_ok),
                format_float(row.theta),
                *(format_float(v) for v in row.tangent),
            )


class SeedCsvExporter(CsvExporterBase[Sequence[Seed]]):
    FORMAT_NAME: str = "seed-csv"
    FORMAT_DESCRIPTION: str = "Seed catalog with provenance"
    COLUMNS = (
        "seed_id",
        "origin",
        "branch",
        "class",
        "index",
        "m1",
        "m2",
        "tof",
        "anchor_m1",
        "anchor_m2",
    )

    def rows(self) -> Iterable[Sequence[Any]]:
        for seed in self.data:
            label = seed.label
            anchor = seed.anchor
            yield (
                seed.seed_id,
                label.origin.value,
                label.d1.value,
                label.hclass.value,
                label.index,
                format_float(seed.x.m1),
                format_float(seed.x.m2),
                format_float(seed.x.tof),
                "" if anchor is None else format_float(anchor[0]),
                "" if anchor is None else format_float(anchor[1]),
            )


class PorkchopCsvExporter(CsvExporterBase[PorkchopGrid]):
    FORMAT_NAME: str = "porkchop-csv"
    FORMAT_DESCRIPTION: str = "Cost grid over departure epoch and flight time"
    COLUMNS = ("t_dep", "tof", "j")

    def rows(self) -> Iterable[Sequence[Any]]:
        grid = self.data
        for row, t_dep in enumerate(grid.t_dep):
            for col, tof in enumerate(grid.tof):
                yield (
                    format_float(t_dep),
                    format_float(tof),
                    format_float(grid.j[row, col]),
                )


class EventCsvExporter(CsvExporterBase[Sequence[TimelineEvent]]):
    FORMAT_NAME: str = "event-csv"
    FORMAT_DESCRIPTION: str = "Time-line intersection events"
    COLUMNS = EVENT_COLUMNS

    def rows(self) -> Iterable[Sequence[Any]]:
        for event in self.data:
            yield (
                format_float(event.t_dep),
                format_float(event.tof),
                event.family_index,
                format_float(event.member_interp.m1),
                format_float(event.member_interp.m2),
                event.hclass.value,
                format_float(event.j),
                format_float(event.residual),
                format_flag(event.pvt_ok),
            )


def _records(stream: IO[str], columns: Sequence[str]) -> list[dict[str, str]]:
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != tuple(columns):
        raise ValueError(f"Unexpected CSV header: {reader.fieldnames}")
    return list(reader)


def read_family_csv(stream: IO[str]) -> list[FamilyRow]:
    return [
        FamilyRow(
            index=int(record["index"]),
            x=DesignPoint(
                float(record["m1"]), float(record["m2"]), float(record["tof"])
            ),
            j=float(record["j"]),
            hclass=StationaryClass(record["class"]),
            pvt_ok=parse_flag(record["pvt"]),
            theta=float(record["theta"]),
            tangent=(
                float(record["tangent_m1"]),
                float(record["tangent_m2"]),
                float(record["tangent_tof"]),
            ),
        )
        for record in _records(stream, FAMILY_COLUMNS)
    ]


def read_event_csv(stream: IO[str]) -> list[TimelineEvent]:
    return [
        TimelineEvent(
            t_dep=float(record["t_dep"]),
            tof=float(record["tof"]),
            family_index=int(record["family"]),
            member_interp=DesignPoint(
                float(record["m1"]), float(record["m2"]), float(record["tof"])
            ),
            hclass=StationaryClass(record["class"]),
            j=float(record["j"]),
            residual=float(record["residual"]),
            pvt_ok=parse_flag(record["pvt"]),
        )
        for record in _records(stream, EVENT_COLUMNS)
    ]
