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
from .cli import build_parser, main

__all__ = [
    build_parser.__name__,
    main.__name__,
]
