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
import csv
import math
from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import IO, Any, Generic, Optional, TypeVar

from pdm_pfsc.logging import logger

_Data = TypeVar("_Data")


def format_float(value: float) -> str:
    """17 significant digits, dot decimal, locale independent."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    return f"{value:.17g}"


def format_flag(value: Optional[bool]) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def parse_flag(value: str) -> Optional[bool]:
    if value == "":
        return None
    if value in ("true", "false"):
        return value == "true"
    raise ValueError(f"Not a flag value: {value!r}")


class ExporterBase(ABC, Generic[_Data]):
    FORMAT_NAME: str
    FORMAT_DESCRIPTION: str

    def __init__(self, data: _Data, name: str) -> None:
        self.__data = data
        self.__name = name

    @property
    @abstractmethod
    def target_file_extension(self) -> str:
        raise NotImplementedError()

    @property
    def data(self) -> _Data:
        return self.__data

    @property
    def name(self) -> str:
        return self.__name

    @property
    def file_name(self) -> str:
        return f"{self.__name}{self.target_file_extension}"

    @abstractmethod
    def export(self, stream: IO[str]) -> None:
        raise NotImplementedError()

    def write(self, directory: Path) -> Path:
        target = directory / self.file_name
        target.parent.mkdir(parents=True, exist_ok=True)
        logger.debug("Writing %s", target)
        with target.open("w", encoding="utf-8", newline="") as stream:
            self.export(stream)
        return target


class CsvExporterBase(ExporterBase[_Data]):
    COLUMNS: Sequence[str]

    @property
    def target_file_extension(self) -> str:
        return ".csv"

    @abstractmethod
    def rows(self) -> Iterable[Sequence[Any]]:
        raise NotImplementedError()

    def export(self, stream: IO[str]) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.COLUMNS)
        for row in self.rows():
            writer.writerow(row)
