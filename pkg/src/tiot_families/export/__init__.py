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
from collections import namedtuple
from typing import Any, Sequence

from .base import (
    CsvExporterBase,
    ExporterBase,
    format_flag,
    format_float,
    parse_flag,
)
from .csv import (
    EventCsvExporter,
    FamilyCsvExporter,
    PorkchopCsvExporter,
    SeedCsvExporter,
    read_event_csv,
    read_family_csv,
)
from .dataclasses import FamilyRow, family_rows
from .json import JsonExporter
from .payloads import atlas_payload

__all__ = [
    ExporterBase.__name__,
    CsvExporterBase.__name__,
    EventCsvExporter.__name__,
    FamilyCsvExporter.__name__,
    PorkchopCsvExporter.__name__,
    SeedCsvExporter.__name__,
    JsonExporter.__name__,
    FamilyRow.__name__,
    family_rows.__name__,
    atlas_payload.__name__,
    format_flag.__name__,
    format_float.__name__,
    parse_flag.__name__,
    read_event_csv.__name__,
    read_family_csv.__name__,
    "get_exporter",
    "get_exporters",
]

__FORMATS: dict[str, type[ExporterBase]] = {
    exporter.FORMAT_NAME: exporter
    for exporter in (
        FamilyCsvExporter,
        SeedCsvExporter,
        PorkchopCsvExporter,
        EventCsvExporter,
        JsonExporter,
    )
}

_exporter_description = namedtuple(
    "ExporterDescription",
    [
        "name",
        "description",
    ],
)


def get_exporter(file_format: str, data: Any, name: str) -> ExporterBase:
    if file_format not in __FORMATS:
        raise KeyError(file_format)

    exporter_type = __FORMATS[file_format]
    return exporter_type(data, name)


def get_exporters() -> Sequence[_exporter_description]:
    return [
        _exporter_description(
            f.FORMAT_NAME,
            f.FORMAT_DESCRIPTION,
        )
        for f in __FORMATS.values()
    ]
