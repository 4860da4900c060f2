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
from .analysis import burn_decomposition, min_j_members
from .builder import AtlasBuilder, build_atlas
from .connections import connection_graph, detect_connections, endpoints_meet
from .dataclasses import (
    Atlas,
    AtlasEntry,
    AtlasSettings,
    BurnComponents,
    BurnReport,
    Connection,
    EndpointKind,
    EndpointLabel,
)
from .dedup import dedup
from .graph import ConnectionGraph
from .labels import (
    anchor_distance,
    label_endpoints,
    nodal_direction,
    pi_configuration,
)

__all__ = [
    Atlas.__name__,
    AtlasEntry.__name__,
    AtlasSettings.__name__,
    BurnComponents.__name__,
    BurnReport.__name__,
    Connection.__name__,
    EndpointKind.__name__,
    EndpointLabel.__name__,
    ConnectionGraph.__name__,
    AtlasBuilder.__name__,
    build_atlas.__name__,
    dedup.__name__,
    label_endpoints.__name__,
    nodal_direction.__name__,
    pi_configuration.__name__,
    anchor_distance.__name__,
    endpoints_meet.__name__,
    connection_graph.__name__,
    detect_connections.__name__,
    min_j_members.__name__,
    burn_decomposition.__name__,
]
