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

import numpy as np

from ..continuation import Family, FamilyMember
from ..core.abstractions import Vector
from ..cost import ScenarioContext, StationaryClass
from ..lambert import ConicKind
from .dataclasses import BurnComponents, BurnReport


def _eligible(
    member: FamilyMember, require_pvt: bool, elliptic_only: bool
) -> bool:
    if member.hclass is not StationaryClass.MINIMUM:
        return False
    if require_pvt and member.pvt_ok is not True:
        return False
    if elliptic_only and member.cost.arc.conic is not ConicKind.ELLIPTIC:
        return False
    return True


def min_j_members(
    f: Family, require_pvt: bool = False, elliptic_only: bool = False
) -> list[FamilyMember]:
    """Members whose cost is a local minimum along the family, cheapest
    first. Open families never report their terminal members."""
    members = f.members
    count = len(members)
    found = []
    for index, member in enumerate(members):
        if not _eligible(member, require_pvt, elliptic_only):
            continue
        if f.is_cycle:
            neighbours = [(index - 1) % count, (index + 1) % count]
        else:
            if index in (0, count - 1):
                continue
            neighbours = [index - 1, index + 1]
        if all(member.j <= members[k].j for k in neighbours):
            found.append(member)
    return sorted(found, key=lambda m: m.j)


def _lvlh_components(dv: Vector, r: Vector, v: Vector) -> BurnComponents:
    radial = r / np.linalg.norm(r)
    normal = np.cross(r, v)
    normal /= np.linalg.norm(normal)
    tangential = np.cross(normal, radial)
    return BurnComponents(
        radial=float(dv @ radial),
        tangential=float(dv @ tangential),
        normal=float(dv @ normal),
        magnitude=float(np.linalg.norm(dv)),
    )


def burn_decomposition(
    member: FamilyMember, ctx: ScenarioContext
) -> BurnReport:
    departure = ctx.departure_state(member.x.m1)
    arrival = ctx.arrival_state(member.x.m2)
    arc = member.cost.arc
    arc_normal = arc.arc_normal()
    return BurnReport(
        departure=_lvlh_components(member.cost.dv1, departure.r, departure.v),
        arrival=_lvlh_components(member.cost.dv2, arrival.r, arrival.v),
        transfer_inclination=math.acos(
            max(-1.0, min(1.0, float(arc_normal[2])))
        ),
        conic=arc.conic,
        semi_major_axis=arc.semi_major_axis(ctx.g.mu),
    )
