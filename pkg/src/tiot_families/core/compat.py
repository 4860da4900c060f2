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
try:
    from tomllib import load as _load  # type: ignore
    from tomllib import loads as _loads  # type: ignore
except ImportError:
    from tomli import load as _load  # type: ignore
    from tomli import loads as _loads  # type: ignore


load_toml = _load
loads_toml = _loads
