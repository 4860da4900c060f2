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
from collections.abc import Iterable, Mapping, Sequence
from typing import Final, Optional

from pdm_pfsc.logging import logger, traced_function

from ..continuation import ContinuationConfig, Family
from ..cost import ScenarioContext, StationaryClass
from ..seeds import Seed, SeedOrigin
from .analysis import min_j_members
from .connections import detect_connections
from .dataclasses import Atlas, AtlasEntry, AtlasSettings
from .dedup import dedup
from .labels import label_endpoints

_ORIGIN_RANK: Final[dict[SeedOrigin, int]] = {
    SeedOrigin.ASYMPTOTE_INF: 0,
    SeedOrigin.ASYMPTOTE_ZERO: 1,
    SeedOrigin.GRID: 2,
    SeedOrigin.MANUAL: 3,
}
_CLASS_RANK: Final[dict[StationaryClass, int]] = {
    StationaryClass.MINIMUM: 0,
    StationaryClass.SADDLE: 1,
    StationaryClass.MAXIMUM: 2,
    StationaryClass.DEGENERATE: 3,
}


class AtlasBuilder:
    def __init__(
        self,
        families: Sequence[Family],
        seed_catalog: Iterable[Seed],
        ctx: ScenarioContext,
        cfg: Optional[ContinuationConfig] = None,
        settings: Optional[AtlasSettings] = None,
    ) -> None:
        self.__families = list(families)
        self.__seeds = list(seed_catalog)
        self.__ctx = ctx
        self.__cfg = cfg or ContinuationConfig()
        self.__settings = settings or AtlasSettings()

    @traced_function
    def build(self) -> Atlas:
        settings = self.__settings
        seeds_by_id = {seed.seed_id: seed for seed in self.__seeds}
        ordered = sorted(
            self.__families,
            key=lambda f: AtlasBuilder.__provenance(f, seeds_by_id),
        )
        unique = dedup(
            ordered,
            settings.duplicate_tolerance(self.__cfg.ds),
            self.__ctx.time_scale,
            settings.min_overlap,
        )

        entries = [
            self.__entry(index, family)
            for index, family in enumerate(unique, start=1)
        ]
        entries, graph = detect_connections(entries, settings)
        components = graph.components()
        logger.info(
            "Atlas holds %s families in %s connected groups",
            len(entries),
            len(components),
        )
        return Atlas(
            entries=tuple(entries),
            components=tuple(components),
            dropped_duplicates=len(ordered) - len(unique),
        )

    def __entry(self, index: int, family: Family) -> AtlasEntry:
        settings = self.__settings
        return AtlasEntry(
            index=index,
            family=family,
            end_labels=label_endpoints(
                family,
                self.__seeds,
                self.__ctx,
                self.__cfg.sing_tol,
                settings.label_tol,
            ),
            min_j_members=tuple(
                min_j_members(
                    family, settings.require_pvt, settings.elliptic_only
                )
            ),
        )

    @staticmethod
    def __provenance(
        family: Family, seeds_by_id: Mapping[str, Seed]
    ) -> tuple[object, ...]:
        first = family.first.x
        start = (first.tof, first.m1, first.m2)
        seed = seeds_by_id.get(family.seed_id)
        if seed is None:
            return (len(_ORIGIN_RANK), family.d1.value, 0, 0, start)
        label = seed.label
        return (
            _ORIGIN_RANK[label.origin],
            label.d1.value,
            _CLASS_RANK[label.hclass],
            label.index,
            start,
        )


def build_atlas(
    families: Sequence[Family],
    seed_catalog: Iterable[Seed],
    ctx: ScenarioContext,
    cfg: Optional[ContinuationConfig] = None,
    settings: Optional[AtlasSettings] = None,
) -> Atlas:
    return AtlasBuilder(families, seed_catalog, ctx, cfg, settings).build()
