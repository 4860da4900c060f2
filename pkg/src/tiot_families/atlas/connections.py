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
from collections.abc import Sequence

from ..continuation import FamilyMember
from ..kepler import wrapped_difference
from .dataclasses import AtlasEntry, AtlasSettings, Connection, EndpointKind
from .graph import ConnectionGraph


def endpoints_meet(
    first: FamilyMember,
    second: FamilyMember,
    angle_tol: float = 0.1,
    tof_rel_tol: float = 0.1,
) -> bool:
    angle = math.hypot(
        wrapped_difference(first.x.m1, second.x.m1),
        wrapped_difference(first.x.m2, second.x.m2),
    )
    if angle > angle_tol:
        return False
    longest = max(first.x.tof, second.x.tof)
    return abs(first.x.tof - second.x.tof) <= tof_rel_tol * longest


def _pi_ends(entry: AtlasEntry) -> list[tuple[EndpointKind, FamilyMember]]:
    family = entry.family
    ends = zip(entry.end_labels, (family.first, family.last))
    return [(label.kind, member) for label, member in ends if label.kind.is_pi]


def connection_graph(
    entries: Sequence[AtlasEntry], settings: AtlasSettings
) -> ConnectionGraph:
    graph = ConnectionGraph(entry.index for entry in entries)
    for i, first in enumerate(entries):
        first_ends = _pi_ends(first)
        if not first_ends:
            continue
        for second in entries[i + 1 :]:
            if second.family.d1 is not first.family.d1:
                continue
            for kind, member in first_ends:
                for other_kind, other in _pi_ends(second):
                    if kind is not other_kind:
                        continue
                    if endpoints_meet(
                        member,
                        other,
                        settings.angle_tol,
                        settings.tof_rel_tol,
                    ):
                        graph.add_edge(first.index, second.index, kind)
    return graph


def detect_connections(
    entries: Sequence[AtlasEntry], settings: AtlasSettings
) -> tuple[list[AtlasEntry], ConnectionGraph]:
    graph = connection_graph(entries, settings)
    updated = [
        entry.with_connections(
            tuple(
                Connection(other, kind)
                for other, kind in sorted(graph[entry.index].items())
            )
        )
        for entry in entries
    ]
    return updated, graph
