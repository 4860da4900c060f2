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
from collections.abc import Iterable, Iterator, Mapping, Sequence

from .dataclasses import EndpointKind


class ConnectionGraph:
    """Undirected graph of atlas indices joined at shared pi endpoints."""

    def __init__(self, indices: Iterable[int] = ()) -> None:
        self.__nodes: list[int] = []
        self.__edges: dict[int, dict[int, EndpointKind]] = {}
        for index in indices:
            self.add_node(index)

    def add_node(self, index: int) -> None:
        if index in self.__edges:
            return
        self.__nodes.append(index)
        self.__edges[index] = {}

    def add_edge(self, first: int, second: int, kind: EndpointKind) -> None:
        if first not in self.__edges:
            raise ValueError("Invalid node: {}".format(first))
        if second not in self.__edges:
            raise ValueError("Invalid node: {}".format(second))
        if first == second:
            return

        self.__edges[first][second] = kind
        self.__edges[second][first] = kind

    @property
    def nodes(self) -> Sequence[int]:
        return self.__nodes

    @property
    def edges(self) -> Mapping[int, Mapping[int, EndpointKind]]:
        return self.__edges

    def __getitem__(self, item: int) -> Mapping[int, EndpointKind]:
        return self.__edges.get(item, {})

    def __iter__(self) -> Iterator[tuple[int, int, EndpointKind]]:
        for node in self.__nodes:
            for target, kind in sorted(self.__edges[node].items()):
                if node < target:
                    yield node, target, kind

    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        groups: list[tuple[int, ...]] = []
        for start in sorted(self.__nodes):
            if start in seen:
                continue
            stack, group = [start], []
            seen.add(start)
            while stack:
                node = stack.pop()
                group.append(node)
                for target in self.__edges[node]:
                    if target not in seen:
                        seen.add(target)
                        stack.append(target)
            groups.append(tuple(sorted(group)))
        return groups

    def __repr__(self) -> str:
        return "<ConnectionGraph <Nodes {}> <Edges {}>>".format(
            self.__nodes, list(self)
        )

    def __str__(self) -> str:
        lines: list[str] = []
        for node in self.__nodes:
            targets = ",".join(
                "{}[{}]".format(target, kind.value)
                for target, kind in sorted(self.__edges[node].items())
            )
            lines.append("{} -> {}".format(node, targets))
        return "\n".join(lines)
