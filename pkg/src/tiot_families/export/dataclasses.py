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
from dataclasses import dataclass, field
from typing import Optional

from ..continuation import Family
from ..cost import DesignPoint, StationaryClass


@dataclass(frozen=True)
class FamilyRow:
    index: int = field()
    x: DesignPoint = field()
    j: float = field()
    hclass: StationaryClass = field()
    pvt_ok: Optional[bool] = field()
    theta: float = field()
    tangent: tuple[float, float, float] = field()


def family_rows(family: Family) -> list[FamilyRow]:
    return [
        FamilyRow(
            index=index,
            x=member.x,
            j=member.j,
            hclass=member.hclass,
            pvt_ok=member.pvt_ok,
            theta=member.theta,
            tangent=(
                float(member.tangent[0]),
                float(member.tangent[1]),
                float(member.tangent[2]),
            ),
        )
        for index, member in enumerate(family.members)
    ]
