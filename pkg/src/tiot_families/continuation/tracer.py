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
from typing import Optional, TypeAlias

import numpy as np
from pdm_pfsc.logging import logger, traced_function

from ..core.abstractions import Vector
from ..core.errors import (
    BifurcationError,
    CollinearGeometryError,
    CorrectorError,
    SingularSensitivityError,
    TiotError,
)
from ..cost import DerivDomain, DesignPoint, ScenarioContext
from .corrector import (
    TiotConstraintSystem,
    build_member,
    newton_arclength,
    refine_to_family,
)
from .dataclasses import (
    ContinuationConfig,
    Family,
    FamilyEvent,
    FamilyEventKind,
    FamilyMember,
    TerminationReason,
)

SingularErrors: TypeAlias = SingularSensitivityError | CollinearGeometryError
_SINGULAR_ERRORS = (SingularSensitivityError, CollinearGeometryError)


def singular_reason(
    error: SingularErrors, sing_tol: float
) -> TerminationReason:
    """Only geometries near a 180 degree transfer end at the π
    singularity; collinear transfers through 0 or 2π are failures."""
    if abs(error.theta - math.pi) < 2.0 * sing_tol:
        return TerminationReason.SINGULARITY_PI
    return TerminationReason.CORRECTOR_FAILURE


def _wrap_angles(delta: Vector) -> Vector:
    wrapped = np.array(delta, dtype=float)
    wrapped[:2] = (wrapped[:2] + math.pi) % (2.0 * math.pi) - math.pi
    return wrapped


def closure_distance(
    z_prev: Vector, z: Vector, z_seed: Vector
) -> float:
    """Distance from the seed to the segment between two members, with
    anomaly differences taken modulo 2π."""
    offset = _wrap_angles(z_prev - z_seed)
    segment = z - z_prev
    length_sq = float(segment @ segment)
    fraction = 0.0
    if length_sq > 0:
        fraction = min(1.0, max(0.0, -float(offset @ segment) / length_sq))
    return float(np.linalg.norm(offset + fraction * segment))


class _Branch:
    def __init__(
        self,
        members: list[FamilyMember],
        reason: TerminationReason,
        halvings: list[tuple[int, float]],
        bifurcation: bool,
    ) -> None:
        self.members = members
        self.reason = reason
        self.halvings = halvings
        self.bifurcation = bifurcation


class FamilyTracer:
    def __init__(
        self,
        ctx: ScenarioContext,
        dom: DerivDomain,
        cfg: ContinuationConfig,
        seed_id: str = "manual",
    ) -> None:
        self.__ctx = ctx
        self.__dom = dom
        self.__cfg = cfg
        self.__seed_id = seed_id
        self.__system = TiotConstraintSystem(ctx, dom, cfg.fd_step)

    @traced_function
    def trace(self, seed: DesignPoint) -> Family:
        start = refine_to_family(seed, self.__ctx, self.__dom, self.__cfg)
        origin = self.__system.design(start.scaled(self.__ctx.time_scale))
        seed_member = build_member(
            origin.scaled(self.__ctx.time_scale), self.__system
        )
        if seed_member.tangent[2] < 0:
            seed_member = seed_member.reversed()

        forward = self.__branch(seed_member)
        if forward.reason is TerminationReason.CYCLE_CLOSED:
            backward = _Branch([], TerminationReason.CYCLE_CLOSED, [], False)
        else:
            backward = self.__branch(seed_member.reversed())

        members = (
            [m.reversed() for m in reversed(backward.members)]
            + [seed_member]
            + forward.members
        )
        offset = len(backward.members)
        events: list[FamilyEvent] = []
        for index, step in backward.halvings:
            events.append(
                FamilyEvent(FamilyEventKind.STEP_HALVED, offset - index, step)
            )
        for index, step in forward.halvings:
            events.append(
                FamilyEvent(FamilyEventKind.STEP_HALVED, offset + index, step)
            )
        if backward.bifurcation:
            events.append(
                FamilyEvent(FamilyEventKind.BIFURCATION_CANDIDATE, 0)
            )
        if forward.bifurcation:
            events.append(
                FamilyEvent(
                    FamilyEventKind.BIFURCATION_CANDIDATE, len(members) - 1
                )
            )
        events.extend(self.__shape_events(members))
        events.sort(key=lambda e: (e.index, e.kind.value))

        family = Family(
            members=tuple(members),
            end1=backward.reason,
            end2=forward.reason,
            domain=self.__dom,
            d1=self.__ctx.d1,
            seed_id=self.__seed_id,
            events=tuple(events),
        )
        logger.info(
            "Traced family from %s: %s members, ends %s / %s",
            self.__seed_id,
            len(family),
            family.end1.value,
            family.end2.value,
        )
        return family

    def __branch(self, seed_member: FamilyMember) -> _Branch:
        cfg = self.__cfg
        scale = self.__ctx.time_scale
        z_seed = seed_member.x.scaled(scale)
        current = seed_member
        members: list[FamilyMember] = []
        halvings: list[tuple[int, float]] = []
        ds = cfg.ds
        successes = 0

        for _ in range(cfg.max_steps):
            z = current.x.scaled(scale)
            try:
                result = newton_arclength(
                    z + ds * current.tangent,
                    z,
                    current.tangent,
                    ds,
                    self.__system,
                    cfg.newton_tol,
                    cfg.newton_max_iter,
                    cfg.jump_factor * ds,
                )
                member = build_member(
                    result.z, self.__system, current.tangent, result.jacobian
                )
            except _SINGULAR_ERRORS as error:
                logger.debug("Singular geometry while tracing: %s", error)
                reason = singular_reason(error, cfg.sing_tol)
                return _Branch(members, reason, halvings, False)
            except BifurcationError as error:
                logger.warning("Stopping at possible bifurcation: %s", error)
                reason = TerminationReason.CORRECTOR_FAILURE
                return _Branch(members, reason, halvings, True)
            except (CorrectorError, TiotError) as error:
                if ds <= cfg.ds / 2**cfg.max_halvings:
                    logger.debug("Corrector gave up: %s", error)
                    return _Branch(
                        members,
                        TerminationReason.CORRECTOR_FAILURE,
                        halvings,
                        False,
                    )
                ds *= 0.5
                successes = 0
                halvings.append((len(members), ds))
                logger.debug("Halving step to %s after: %s", ds, error)
                continue

            members.append(member)
            reason = self.__termination(member, current, z_seed, len(members))
            if reason is not None:
                return _Branch(members, reason, halvings, False)

            current = member
            successes += 1
            if ds < cfg.ds and successes >= cfg.regrow_after:
                ds = min(cfg.ds, 2.0 * ds)
                successes = 0

        return _Branch(members, TerminationReason.STEP_CAP, halvings, False)

    def __termination(
        self,
        member: FamilyMember,
        previous: FamilyMember,
        z_seed: Vector,
        steps: int,
    ) -> Optional[TerminationReason]:
        cfg = self.__cfg
        if member.x.tof > cfg.tmax:
            return TerminationReason.TOF_ABOVE_MAX
        if member.x.tof < cfg.tmin:
            return TerminationReason.TOF_BELOW_MIN
        if abs(member.theta - math.pi) < cfg.sing_tol:
            return TerminationReason.SINGULARITY_PI
        if steps >= cfg.cycle_arm_steps:
            scale = self.__ctx.time_scale
            distance = closure_distance(
                previous.x.scaled(scale), member.x.scaled(scale), z_seed
            )
            if distance < cfg.closure_tolerance:
                return TerminationReason.CYCLE_CLOSED
        return None

    @staticmethod
    def __shape_events(members: list[FamilyMember]) -> list[FamilyEvent]:
        events: list[FamilyEvent] = []
        for index in range(1, len(members)):
            before, after = members[index - 1], members[index]
            if before.tangent[2] * after.tangent[2] < 0:
                events.append(
                    FamilyEvent(FamilyEventKind.FOLD, index, after.x.tof)
                )
            if before.hclass is not after.hclass:
                events.append(
                    FamilyEvent(
                        FamilyEventKind.CLASS_CHANGE,
                        index,
                        float(np.min(np.abs(after.eigenvalues))),
                    )
                )
        return events


def trace_family(
    seed: DesignPoint,
    ctx: ScenarioContext,
    dom: DerivDomain,
    cfg: ContinuationConfig,
    seed_id: str = "manual",
) -> Family:
    return FamilyTracer(ctx, dom, cfg, seed_id).trace(seed)
