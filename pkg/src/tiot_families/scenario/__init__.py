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
    ANGULAR_ELEMENTS,
    ELEMENT_NAMES,
    ORBIT_SIDES,
    AnalysisSettings,
    PorkchopSettings,
    ScenarioFile,
    SweepSettings,
    branches_name,
    parse_branches,
)
from .reader import (
    CURRENT_SCHEMA,
    ScenarioReader,
    SchemaVersion,
    loads_scenario,
    read_scenario,
    to_mapping,
)

__all__ = [
    "ANGULAR_ELEMENTS",
    "CURRENT_SCHEMA",
    "ELEMENT_NAMES",
    "ORBIT_SIDES",
    AnalysisSettings.__name__,
    PorkchopSettings.__name__,
    ScenarioFile.__name__,
    SweepSettings.__name__,
    ScenarioReader.__name__,
    SchemaVersion.__name__,
    branches_name.__name__,
    parse_branches.__name__,
    loads_scenario.__name__,
    read_scenario.__name__,
    to_mapping.__name__,
]
