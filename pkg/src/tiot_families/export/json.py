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
from dataclasses import asdict, is_dataclass
from enum import Enum
from json import JSONEncoder, dumps
from pathlib import PurePath
from typing import IO, Any

import numpy as np

from .base import ExporterBase


class JsonExporter(ExporterBase[Any]):
    FORMAT_NAME: str = "json"
    FORMAT_DESCRIPTION: str = "Atlas, manifest and sweep documents"

    @property
    def target_file_extension(self) -> str:
        return ".json"

    def export(self, stream: IO[str]) -> None:
        data = self.data
        if is_dataclass(data) and not isinstance(data, type):
            data = asdict(data)
        stream.write(
            dumps(data, cls=_ArraySupportingEncoder, indent=2, sort_keys=True)
        )
        stream.write("\n")


class _ArraySupportingEncoder(JSONEncoder):
    def default(self, o: Any) -> Any:
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.bool_):
            return bool(o)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, Enum):
            return o.value
        if isinstance(o, (frozenset, set)):
            return sorted(o)
        if isinstance(o, PurePath):
            return str(o)
        if is_dataclass(o) and not isinstance(o, type):
            return asdict(o)

        return super().default(o)
