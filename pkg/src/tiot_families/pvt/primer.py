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
"""Primer vector history along a two-impulse transfer.

The primer follows the adjoint of the coast arc, ``p'' = G(r) p``, with
``p`` aligned to the unit burn directions at both ends. The initial primer
rate comes from the arc's transition matrix blocks.
"""
import math
from dataclasses import replace
from typing import Final, Optional

import numpy as np
from pdm_pfsc.logging import logger
from scipy.integrate import solve_ivp
from scipy.optimize import root

from ..continuation import Family, FamilyMember
from ..core.abstractions import Vector
from ..core.concurrency import map_ordered
from ..core.errors import (
    PropagationError,
    SingularSensitivityError,
    TiotError,
)
from ..cost import (
    ScenarioContext,
    StationaryClass,
    arc_stm,
    burn_direction,
    rv_inverse,
)
from ..kepler import PropagatorSettings, Stm, gravity_gradient
from .dataclasses import INTERIOR_EXCLUSION, PrimerHistory

DEFAULT_SAMPLES: Final[int] = 400
DEFAULT_PVT_TOLERANCE: Final[float] = 1e-3
NEAR_PI: Final[float] = 1e-2


def _state_and_primer(_: float, y: Vector, mu: float) -> Vector:
    r, v, p, p_dot = y[:3], y[3:6], y[6:9], y[9:]
    radius = np.linalg.norm(r)
    return np.concatenate(
        (v, -mu * r / radius**3, p_dot, gravity_gradient(r, mu) @ p)
    )


def _propagate(
    y0: Vector,
    tof: float,
    mu: float,
    settings: PropagatorSettings,
    t_eval: Optional[Vector] = None,
) -> tuple[Vector, Vector]:
    solution = solve_ivp(
        _state_and_primer,
        (0.0, tof),
        y0,
        method=settings.method,
        rtol=settings.rtol,
        atol=settings.atol,
        t_eval=t_eval,
        args=(mu,),
    )
    if not solution.success:
        raise PropagationError(
            f"Primer propagation failed: {solution.message}"
        )
    return solution.t, solution.y


def _shoot_primer_rate(
    y_start: Vector,
    u2: Vector,
    tof: float,
    ctx: ScenarioContext,
    guess: Vector,
) -> Vector:
    def _miss(p_dot: Vector) -> Vector:
        y0 = np.concatenate((y_start, p_dot))
        _, y = _propagate(y0, tof, ctx.g.mu, ctx.propagator)
        return y[6:9, -1] - u2

    result = root(_miss, guess, method="hybr")
    if not result.success:
        raise PropagationError(f"Primer shooting failed: {result.message}")
    return np.asarray(result.x, dtype=float)


def initial_primer_rate(
    stm: Stm, u1: Vector, u2: Vector, theta: float
) -> Vector:
    return rv_inverse(stm, theta) @ (u2 - stm.rr @ u1)


def primer_history(
    member: FamilyMember,
    ctx: ScenarioContext,
    n_samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_PVT_TOLERANCE,
) -> PrimerHistory:
    if n_samples < 3:
        raise ValueError(f"Need at least three primer samples: {n_samples}")
    arc = member.cost.arc
    u1 = burn_direction(member.cost.dv1)
    u2 = burn_direction(member.cost.dv2)
    stm = arc_stm(arc, ctx)

    y_start = np.concatenate((arc.r1, arc.v1g, u1))
    try:
        p_dot = initial_primer_rate(stm, u1, u2, arc.theta)
    except SingularSensitivityError:
        if abs(arc.theta - math.pi) < NEAR_PI:
            raise
        logger.debug("Poorly conditioned phi_rv; shooting for the primer")
        guess, *_ = np.linalg.lstsq(stm.rv, u2 - stm.rr @ u1, rcond=None)
        p_dot = _shoot_primer_rate(y_start, u2, arc.tof, ctx, guess)

    tau, y = _propagate(
        np.concatenate((y_start, p_dot)),
        arc.tof,
        ctx.g.mu,
        ctx.propagator,
        np.linspace(0.0, arc.tof, n_samples),
    )
    p = y[6:9].T
    p_rate = y[9:].T
    pmag = np.linalg.norm(p, axis=1)
    boundary = max(
        float(np.linalg.norm(p[0] - u1)), float(np.linalg.norm(p[-1] - u2))
    )

    history = PrimerHistory(
        tau=tau, p=p, pmag=pmag, boundary_residual=boundary
    )
    touching = history.interior_mask() & (np.abs(pmag - 1.0) <= tol)
    if np.any(touching):
        magnitude_rate = np.einsum("ij,ij->i", p, p_rate) / pmag
        defect = float(np.max(np.abs(magnitude_rate[touching])))
    else:
        defect = 0.0
    return replace(history, coast_defect=defect)


def check_pvt(
    h: PrimerHistory,
    tol: float = DEFAULT_PVT_TOLERANCE,
    exclusion: float = INTERIOR_EXCLUSION,
) -> bool:
    return h.interior_max(exclusion) <= 1.0 + tol


def member_satisfies_pvt(
    member: FamilyMember,
    ctx: ScenarioContext,
    n_samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_PVT_TOLERANCE,
) -> Optional[bool]:
    """PVT verdict for one member, ``None`` when no history exists."""
    try:
        return check_pvt(primer_history(member, ctx, n_samples, tol), tol)
    except TiotError as error:
        logger.debug("No primer history at %s: %s", member.x, error)
        return None


def annotate_family(
    family: Family,
    ctx: ScenarioContext,
    n_samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_PVT_TOLERANCE,
    workers: int = 1,
) -> Family:
    branch_ctx = ctx.with_branch(family.d1)
    verdicts = map_ordered(
        lambda m: member_satisfies_pvt(m, branch_ctx, n_samples, tol),
        family.members,
        workers,
    )
    return family.with_members(
        [m.with_pvt(ok) for m, ok in zip(family.members, verdicts)]
    )


def pvt_interval_violations(family: Family) -> list[int]:
    """Minimum-class members that pass PVT while both neighbours fail."""
    members = family.members
    violations = []
    for index, member in enumerate(members):
        if member.pvt_ok is not True:
            continue
        if member.hclass is not StationaryClass.MINIMUM:
            continue
        neighbours = [
            members[k].pvt_ok
            for k in (index - 1, index + 1)
            if 0 <= k < len(members)
        ]
        if neighbours and not any(ok is True for ok in neighbours):
            violations.append(index)
    if violations:
        logger.warning(
            "Isolated PVT-satisfying members in family %s: %s",
            family.seed_id,
            violations,
        )
    return violations
