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
from dataclasses import dataclass, field
from typing import Final, Optional

import numpy as np
from pdm_pfsc.logging import logger
from scipy.linalg import svd

from ..core.abstractions import ConstraintSystem, Matrix, Vector
from ..core.errors import BifurcationError, CorrectorError
from ..cost import (
    DerivDomain,
    DesignPoint,
    ScenarioContext,
    central_difference,
    chart_for,
    classify_stationary,
    evaluate_cost,
    gradient,
    hessian_from_matrix,
)
from .dataclasses import ContinuationConfig, FamilyMember

RANK_TOLERANCE: Final[float] = 1e-8
REFINE_MAX_ITERATIONS: Final[int] = 10


class TiotConstraintSystem:
    def __init__(
        self, ctx: ScenarioContext, dom: DerivDomain, h: float = 1e-7
    ) -> None:
        self.__ctx = ctx
        self.__dom = dom
        self.__h = h

    @property
    def context(self) -> ScenarioContext:
        return self.__ctx

    @property
    def domain(self) -> DerivDomain:
        return self.__dom

    def design(self, z: Vector) -> DesignPoint:
        return DesignPoint.from_scaled(z, self.__ctx.time_scale)

    def residual(self, z: Vector) -> Vector:
        return gradient(self.design(z), self.__ctx, self.__dom)

    def jacobian(self, z: Vector) -> Matrix:
        return central_difference(self.residual, z, self.__h)


def constraints(
    x: DesignPoint, ctx: ScenarioContext, dom: DerivDomain
) -> Vector:
    return gradient(x, ctx, dom)


def constraint_jacobian(
    x: DesignPoint,
    ctx: ScenarioContext,
    dom: DerivDomain,
    h: float = 1e-7,
) -> Matrix:
    system = TiotConstraintSystem(ctx, dom, h)
    return system.jacobian(x.scaled(ctx.time_scale))


def null_direction(
    jac: Matrix, prev_tangent: Optional[Vector] = None
) -> Vector:
    _, singular, right = svd(np.asarray(jac, dtype=float))
    if singular[-1] <= RANK_TOLERANCE * singular[0]:
        raise BifurcationError(tuple(float(s) for s in singular))

    direction = right[-1]
    direction = direction / np.linalg.norm(direction)
    if prev_tangent is not None and float(direction @ prev_tangent) < 0:
        direction = -direction
    return direction


@dataclass(frozen=True, eq=False)
class NewtonResult:
    z: Vector = field()
    iterations: int = field()
    residual_norms: tuple[float, ...] = field()
    jacobian: Optional[Matrix] = field(default=None)


def newton_arclength(
    zp: Vector,
    z_prev: Vector,
    tangent: Vector,
    ds: float,
    system: ConstraintSystem,
    tol: float = 1e-10,
    max_iter: int = 20,
    jump_limit: float = np.inf,
) -> NewtonResult:
    """Newton on the constraints closed by the arclength equation."""
    z = np.array(zp, dtype=float)
    norms: list[float] = []
    jacobian: Optional[Matrix] = None

    for iteration in range(max_iter + 1):
        residual = np.asarray(system.residual(z), dtype=float)
        arclength = float((z - z_prev) @ tangent) - ds
        norms.append(max(float(np.linalg.norm(residual)), abs(arclength)))
        if np.linalg.norm(residual) < tol and abs(arclength) < tol:
            break
        if iteration == max_iter:
            raise CorrectorError(
                f"Newton did not converge in {max_iter} iterations "
                f"(residual {norms[-1]:.3e})"
            )

        jacobian = np.asarray(system.jacobian(z), dtype=float)
        bordered = np.vstack((jacobian, tangent))
        try:
            delta = np.linalg.solve(
                bordered, np.concatenate((residual, [arclength]))
            )
        except np.linalg.LinAlgError as error:
            raise CorrectorError(
                f"Singular bordered system: {error}"
            ) from error
        z = z - delta
        logger.debug(
            "Corrector iteration %s, residual %s", iteration, norms[-1]
        )

    distance = float(np.linalg.norm(z - z_prev))
    if distance > jump_limit:
        raise CorrectorError(
            f"Corrected point jumped {distance:.3e} (limit {jump_limit:.3e})"
        )
    return NewtonResult(z, len(norms) - 1, tuple(norms), jacobian)


def build_member(
    z: Vector,
    system: TiotConstraintSystem,
    prev_tangent: Optional[Vector] = None,
    jacobian: Optional[Matrix] = None,
) -> FamilyMember:
    ctx = system.context
    x = system.design(z)
    cost = evaluate_cost(x, ctx)
    if jacobian is None:
        jacobian = system.jacobian(z)
    tangent = null_direction(jacobian, prev_tangent)
    hessian = hessian_from_matrix(
        jacobian @ chart_for(ctx, system.domain, x.tof).basis()
    )
    return FamilyMember(
        x=x,
        cost=cost,
        hclass=classify_stationary(hessian),
        theta=cost.theta,
        tangent=tangent,
        eigenvalues=hessian.eigenvalues,
    )


def correct(
    xp: DesignPoint,
    x_prev: DesignPoint,
    tangent: Vector,
    ds: float,
    ctx: ScenarioContext,
    dom: DerivDomain,
    cfg: ContinuationConfig,
) -> FamilyMember:
    system = TiotConstraintSystem(ctx, dom, cfg.fd_step)
    result = newton_arclength(
        xp.scaled(ctx.time_scale),
        x_prev.scaled(ctx.time_scale),
        tangent,
        ds,
        system,
        cfg.newton_tol,
        cfg.newton_max_iter,
        cfg.jump_limit,
    )
    return build_member(result.z, system, tangent, result.jacobian)


def refine_to_family(
    x: DesignPoint,
    ctx: ScenarioContext,
    dom: DerivDomain,
    cfg: Optional[ContinuationConfig] = None,
    max_iter: int = REFINE_MAX_ITERATIONS,
) -> DesignPoint:
    """Minimum-norm Gauss-Newton from ``x`` onto the family curve."""
    cfg = cfg or ContinuationConfig()
    system = TiotConstraintSystem(ctx, dom, cfg.fd_step)
    z = x.scaled(ctx.time_scale)
    for _ in range(max_iter):
        residual = system.residual(z)
        if np.linalg.norm(residual) < cfg.newton_tol:
            return system.design(z)
        delta, *_ = np.linalg.lstsq(system.jacobian(z), residual, rcond=None)
        z = z - delta

    residual = system.residual(z)
    if np.linalg.norm(residual) < cfg.newton_tol:
        return system.design(z)
    raise CorrectorError(
        f"Seed refinement stalled at residual {np.linalg.norm(residual):.3e}"
    )


def refine_on_plane(
    x: DesignPoint,
    ctx: ScenarioContext,
    dom: DerivDomain,
    cfg: Optional[ContinuationConfig] = None,
    max_iter: int = REFINE_MAX_ITERATIONS,
) -> DesignPoint:
    """Newton in ``(M1, M2)`` with the time of flight held at ``x.tof``."""
    cfg = cfg or ContinuationConfig()
    system = TiotConstraintSystem(ctx, dom, cfg.fd_step)
    plane = np.array([0.0, 0.0, 1.0])
    z = x.scaled(ctx.time_scale)
    for iteration in range(max_iter + 1):
        residual = system.residual(z)
        norm = float(np.linalg.norm(residual))
        if norm < cfg.newton_tol:
            return system.design(z)
        if iteration == max_iter:
            break
        bordered = np.vstack((system.jacobian(z), plane))
        try:
            delta = np.linalg.solve(bordered, np.append(residual, 0.0))
        except np.linalg.LinAlgError as error:
            raise CorrectorError(
                f"Singular fixed-tof system: {error}"
            ) from error
        z = z - delta
        logger.debug("Plane iteration %s, residual %s", iteration, norm)

    raise CorrectorError(
        f"Fixed-tof refinement stalled at residual {norm:.3e} "
        f"(tof {x.tof:.6g} s)"
    )
