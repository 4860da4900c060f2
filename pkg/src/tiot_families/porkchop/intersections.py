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
"""Intersections of traced families with departure time-lines.

A family member ``(M1, M2, t)`` is reachable at epoch ``T`` when
``M1 = n1 T + M1⁰`` and ``M2 - n2 t = n2 T + M2⁰`` modulo 2π. Members are
interpolated linearly to bracket such epochs; every bracket is then
re-converged with Newton on the temporal gradient.
"""
import math
from collections.abc import Iterable, Sequence
from dataclasses import replace
from typing import Final, Optional

import numpy as np
from pdm_pfsc.logging import logger, traced_function

from ..atlas import AtlasEntry
from ..continuation import (
    Family,
    FamilyMember,
    TiotConstraintSystem,
    build_member,
)
from ..core.abstractions import Vector
from ..core.errors import CorrectorError, TiotError
from ..cost import (
    DerivDomain,
    DesignPoint,
    ScenarioContext,
    TemporalChart,
    central_difference,
    gradient,
)
from ..pvt import member_satisfies_pvt
from .dataclasses import TimelineEvent

_TWO_PI: Final[float] = 2.0 * math.pi
EVENT_TOLERANCE: Final[float] = 1e-8
EVENT_DEDUP: Final[float] = 1e-3


def reconverge_event(
    t_dep: float,
    tof: float,
    ctx: ScenarioContext,
    tol: float = 1e-10,
    max_iter: int = 20,
) -> tuple[Vector, float]:
    """Newton on the temporal gradient in scaled ``(T, t)``."""
    chart = TemporalChart(ctx)

    def _residual(z: Vector) -> Vector:
        return gradient(chart.to_design(z), ctx, DerivDomain.TEMPORAL)

    z = np.array([t_dep, tof]) / ctx.time_scale
    norm = math.inf
    for _ in range(max_iter):
        value = _residual(z)
        norm = float(np.linalg.norm(value))
        if norm < tol:
            return z, norm
        try:
            z = z - np.linalg.solve(central_difference(_residual, z), value)
        except np.linalg.LinAlgError as error:
            raise CorrectorError(
                f"Singular event Jacobian: {error}"
            ) from error
        if not z[1] > 0:
            raise CorrectorError("Event re-convergence reached t <= 0")

    norm = float(np.linalg.norm(_residual(z)))
    if norm < EVENT_TOLERANCE:
        return z, norm
    raise CorrectorError(f"Event did not re-converge (residual {norm:.3e})")


def _mismatch(
    member: FamilyMember, ctx: ScenarioContext, k1: int
) -> tuple[float, float]:
    """Epoch matching ``M1`` on sheet ``k1`` and the arrival phase miss
    in turns."""
    x = member.x
    t_dep = (x.m1 - ctx.dep.m0 + _TWO_PI * k1) / ctx.n1
    phase = x.m2 - ctx.n2 * x.tof - ctx.n2 * t_dep - ctx.arr.m0
    return t_dep, phase / _TWO_PI


def _sheets(
    a: FamilyMember,
    b: FamilyMember,
    ctx: ScenarioContext,
    t_range: tuple[float, float],
) -> range:
    low = min(a.x.m1, b.x.m1) - ctx.dep.m0
    high = max(a.x.m1, b.x.m1) - ctx.dep.m0
    first = math.floor((ctx.n1 * t_range[0] - high) / _TWO_PI)
    last = math.ceil((ctx.n1 * t_range[1] - low) / _TWO_PI)
    return range(first, last + 1)


def segment_brackets(
    a: FamilyMember,
    b: FamilyMember,
    ctx: ScenarioContext,
    t_range: tuple[float, float],
) -> list[tuple[float, float]]:
    """Interpolated ``(T, t)`` where the segment meets a time-line."""
    found = []
    for k1 in _sheets(a, b, ctx, t_range):
        t_a, phi_a = _mismatch(a, ctx, k1)
        t_b, phi_b = _mismatch(b, ctx, k1)
        if phi_a == phi_b:
            continue
        low, high = sorted((phi_a, phi_b))
        for k2 in range(math.ceil(low), math.floor(high) + 1):
            s = (k2 - phi_a) / (phi_b - phi_a)
            if not 0.0 <= s <= 1.0:
                continue
            t_dep = t_a + s * (t_b - t_a)
            if not t_range[0] <= t_dep <= t_range[1]:
                continue
            found.append((t_dep, a.x.tof + s * (b.x.tof - a.x.tof)))
    return found


def _event(
    entry: AtlasEntry,
    guess: tuple[float, float],
    ctx: ScenarioContext,
    pvt_samples: Optional[int],
) -> TimelineEvent:
    z, residual = reconverge_event(guess[0], guess[1], ctx)
    chart = TemporalChart(ctx)
    x = chart.to_design(z)
    system = TiotConstraintSystem(ctx, DerivDomain.TEMPORAL)
    member = build_member(x.scaled(ctx.time_scale), system)
    pvt_ok = None
    if pvt_samples is not None:
        pvt_ok = member_satisfies_pvt(member, ctx, pvt_samples)
    return TimelineEvent(
        t_dep=float(z[0] * ctx.time_scale),
        tof=x.tof,
        family_index=entry.index,
        member_interp=DesignPoint(x.m1 % _TWO_PI, x.m2 % _TWO_PI, x.tof),
        hclass=member.hclass,
        j=member.j,
        residual=residual,
        pvt_ok=pvt_ok,
    )


def _close(first: TimelineEvent, second: TimelineEvent, scale: float) -> bool:
    return (
        math.hypot(
            (first.t_dep - second.t_dep) / scale,
            (first.tof - second.tof) / scale,
        )
        < EVENT_DEDUP
    )


def _nearest_turn(angle: float, reference: float) -> float:
    return reference + (angle - reference + math.pi) % _TWO_PI - math.pi


def family_segments(
    family: Family,
) -> list[tuple[FamilyMember, FamilyMember]]:
    """Consecutive member pairs, closed back to the first member for
    cycles with its anomalies shifted onto the last member's turn."""
    members: Sequence[FamilyMember] = family.members
    segments = list(zip(members[:-1], members[1:]))
    if family.is_cycle and len(members) > 2:
        last, first = members[-1], members[0]
        closing = DesignPoint(
            _nearest_turn(first.x.m1, last.x.m1),
            _nearest_turn(first.x.m2, last.x.m2),
            first.x.tof,
        )
        segments.append((last, replace(first, x=closing)))
    return segments


@traced_function
def intersect_families(
    entries: Iterable[AtlasEntry],
    ctx: ScenarioContext,
    t_range: tuple[float, float],
    pvt_samples: Optional[int] = None,
) -> list[TimelineEvent]:
    events: list[TimelineEvent] = []
    dropped = 0
    for entry in entries:
        family = entry.family
        if family.domain is not DerivDomain.TEMPORAL:
            logger.warning(
                "Skipping family %s traced in the %s domain",
                entry.index,
                family.domain.value,
            )
            continue
        branch_ctx = ctx.with_branch(family.d1)
        for a, b in family_segments(family):
            for guess in segment_brackets(a, b, branch_ctx, t_range):
                try:
                    event = _event(entry, guess, branch_ctx, pvt_samples)
                except TiotError as error:
                    logger.debug("Dropped event near %s: %s", guess, error)
                    dropped += 1
                    continue
                scale = ctx.time_scale
                if any(
                    e.family_index == event.family_index
                    and _close(e, event, scale)
                    for e in events
                ):
                    continue
                events.append(event)

    if dropped:
        logger.warning("Dropped %s unconverged time-line events", dropped)
    events.sort(key=lambda e: (e.t_dep, e.tof, e.family_index))
    logger.info("Found %s time-line events", len(events))
    return events
