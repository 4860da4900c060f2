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
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

_In = TypeVar("_In")
_Out = TypeVar("_Out")


def map_ordered(
    function: Callable[[_In], _Out],
    items: Iterable[_In],
    workers: int = 1,
) -> list[_Out]:
    """Apply ``function`` to every item, preserving input order.

    A single worker runs inline so that tracebacks and logging stay
    sequential.
    """
    work = list(items)
    if workers <= 1 or len(work) <= 1:
        return [function(item) for item in work]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(function, work))
