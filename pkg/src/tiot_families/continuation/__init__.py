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
from .corrector import (
    NewtonResult,
    TiotConstraintSystem,
    build_member,
    constraint_jacobian,
    constraints,
    correct,
    newton_arclength,
    null_direction,
    refine_on_plane,
    refine_to_family,
)
from .dataclasses import (
    ContinuationConfig,
    Family,
    FamilyEvent,
    FamilyEventKind,
    FamilyMember,
    TerminationReason,
)
from .tracer import (
    FamilyTracer,
    closure_distance,
    singular_reason,
    trace_family,
)

__all__ = [
    ContinuationConfig.__name__,
    TerminationReason.__name__,
    FamilyEvent.__name__,
    FamilyEventKind.__name__,
    FamilyMember.__name__,
    Family.__name__,
    FamilyTracer.__name__,
    TiotConstraintSystem.__name__,
    NewtonResult.__name__,
    constraints.__name__,
    constraint_jacobian.__name__,
    null_direction.__name__,
    newton_arclength.__name__,
    build_member.__name__,
    correct.__name__,
    refine_on_plane.__name__,
    refine_to_family.__name__,
    closure_distance.__name__,
    singular_reason.__name__,
    trace_family.__name__,
]
