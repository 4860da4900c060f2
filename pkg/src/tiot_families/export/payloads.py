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
"""Plain mappings written by the JSON exporter."""
from collections.abc import Mapping, Sequence
from typing import Any, Optional

from ..atlas import Atlas, AtlasEntry, BurnReport, EndpointLabel
from ..continuation import FamilyMember


def _end(label: EndpointLabel) -> dict[str, Any]:
    return {
        "label": str(label),
        "kind": label.kind.value,
        "reason": label.reason.value,
        "seed": None if label.seed is None else label.seed.seed_id,
    }


def _member_index(entry: AtlasEntry, member: FamilyMember) -> int:
    for index, candidate in enumerate(entry.family.members):
        if candidate is member:
            return index
    raise ValueError("Member does not belong to the family")


def _min_j(
    entry: AtlasEntry, burns: Optional[Sequence[BurnReport]]
) -> list[dict[str, Any]]:
    found = []
    for position, member in enumerate(entry.min_j_members):
        item: dict[str, Any] = {
            "index": _member_index(entry, member),
            "m1": member.x.m1,
            "m2": member.x.m2,
            "tof": member.x.tof,
            "j": member.j,
            "pvt": member.pvt_ok,
        }
        if burns is not None:
            item["burns"] = burns[position]
        found.append(item)
    return found


def atlas_payload(
    atlas: Atlas,
    burns: Optional[Mapping[int, Sequence[BurnReport]]] = None,
) -> dict[str, Any]:
    burns = burns or {}
    families = []
    for entry in atlas:
        family = entry.family
        families.append(
            {
                "index": entry.index,
                "seed_id": family.seed_id,
                "branch": family.d1.value,
                "domain": family.domain.value,
                "members": len(family),
                "cycle": family.is_cycle,
                "ends": [_end(label) for label in entry.end_labels],
                "connections": [
                    {"other": c.other, "kind": c.kind.value}
                    for c in entry.connections
                ],
                "events": [
                    {"kind": e.kind.value, "index": e.index, "value": e.value}
                    for e in family.events
                ],
                "min_j": _min_j(entry, burns.get(entry.index)),
            }
        )
    return {
        "families": families,
        "components": [list(c) for c in atlas.components],
        "dropped_duplicates": atlas.dropped_duplicates,
    }
