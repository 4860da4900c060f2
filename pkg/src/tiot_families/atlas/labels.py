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
from collections.abc import Iterable
from typing import Final, Optional

import numpy as np
from pdm_pfsc.logging import logger

from ..continuation import Family, FamilyMember, TerminationReason
from ..core.abstractions import Vector
from ..cost import ScenarioContext
from ..kepler import orbit_normal, periapsis_direction, wrapped_difference
from ..seeds import Seed, SeedOrigin
from .dataclasses import EndpointKind, EndpointLabel

COPLANAR_TOLERANCE: Final[float] = 1e-9


def nodal_direction(ctx: ScenarioContext) -> Vector:
    """Unit vector along the line of nodes of the two orbit planes.

    Coplanar orbits have no nodal line; the departure periapsis direction
    stands in for it.
    """
    line = np.cross(orbit_normal(ctx.dep), orbit_normal(ctx.arr))
    norm = float(np.linalg.norm(line))
    if norm < COPLANAR_TOLERANCE:
        return periapsis_direction(ctx.dep)
    return line / norm


def pi_configuration(
    member: FamilyMember, ctx: ScenarioContext
) -> EndpointKind:
    r1 = member.cost.arc.r1
    if float(r1 @ nodal_direction(ctx)) >= 0.0:
        return EndpointKind.PI1
    return EndpointKind.PI2


def anchor_distance(
    member: FamilyMember, anchor: tuple[float, float]
) -> float:
    return math.hypot(
        wrapped_difference(member.x.m1, anchor[0]),
        wrapped_difference(member.x.m2, anchor[1]),
    )


def _nearest_seed(
    member: FamilyMember,
    seeds: Iterable[Seed],
    origin: SeedOrigin,
    family: Family,
    tol: float,
) -> Optional[Seed]:
    best: Optional[Seed] = None
    best_distance = tol
    for seed in seeds:
        if seed.label.origin is not origin or seed.label.d1 is not family.d1:
            continue
        if seed.anchor is None:
            continue
        distance = anchor_distance(member, seed.anchor)
        if distance <= best_distance:
            best, best_distance = seed, distance
    return best


def _label_end(
    member: FamilyMember,
    reason: TerminationReason,
    family: Family,
    seeds: Iterable[Seed],
    ctx: ScenarioContext,
    sing_tol: float,
    tol: float,
) -> EndpointLabel:
    near_pi = abs(member.theta - math.pi) < 2.0 * sing_tol
    if reason is TerminationReason.CYCLE_CLOSED:
        return EndpointLabel(EndpointKind.CYCLE, reason)
    if reason is TerminationReason.STEP_CAP:
        return EndpointLabel(EndpointKind.CAP, reason)

    if reason is TerminationReason.TOF_ABOVE_MAX:
        seed = _nearest_seed(
            member, seeds, SeedOrigin.ASYMPTOTE_INF, family, tol
        )
        if seed is not None:
            return EndpointLabel(
                EndpointKind.INF_ASYMPTOTE, reason, seed.label
            )
    elif reason is TerminationReason.TOF_BELOW_MIN:
        seed = _nearest_seed(
            member, seeds, SeedOrigin.ASYMPTOTE_ZERO, family, tol
        )
        if seed is not None:
            return EndpointLabel(
                EndpointKind.ZERO_ASYMPTOTE, reason, seed.label
            )

    if near_pi:
        return EndpointLabel(pi_configuration(member, ctx), reason)

    logger.warning(
        "Unidentified %s endpoint of family %s at %s",
        reason.value,
        family.seed_id,
        member.x,
    )
    return EndpointLabel(EndpointKind.UNIDENTIFIED, reason)


def label_endpoints(
    f: Family,
    seed_catalog: Iterable[Seed],
    ctx: ScenarioContext,
    sing_tol: float = 0.01,
    tol: float = 0.3,
) -> tuple[EndpointLabel, EndpointLabel]:
    seeds = list(seed_catalog)
    branch_ctx = ctx.with_branch(f.d1)
    return (
        _label_end(f.first, f.end1, f, seeds, branch_ctx, sing_tol, tol),
        _label_end(f.last, f.end2, f, seeds, branch_ctx, sing_tol, tol),
    )
