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
from .dataclasses import INTERIOR_EXCLUSION, PrimerHistory
from .primer import (
    DEFAULT_PVT_TOLERANCE,
    DEFAULT_SAMPLES,
    annotate_family,
    check_pvt,
    initial_primer_rate,
    member_satisfies_pvt,
    primer_history,
    pvt_interval_violations,
)

__all__ = [
    "INTERIOR_EXCLUSION",
    "DEFAULT_PVT_TOLERANCE",
    "DEFAULT_SAMPLES",
    PrimerHistory.__name__,
    primer_history.__name__,
    check_pvt.__name__,
    initial_primer_rate.__name__,
    member_satisfies_pvt.__name__,
    annotate_family.__name__,
    pvt_interval_violations.__name__,
]
