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
from collections.abc import Callable, Iterable, Sequence
from typing import Final, Optional, TypeAlias

import numpy as np
from pdm_pfsc.logging import logger, traced_function

from ..continuation import (
    ContinuationConfig,
    refine_on_plane,
    refine_to_family,
)
from ..core.abstractions import Vector
from ..core.errors import TiotError
from ..cost import (
    DerivDomain,
    DesignPoint,
    ScenarioContext,
    StationaryClass,
    TemporalChart,
    central_difference,
    classify_stationary,
    gradient,
    hessian_fd,
)
from ..kepler import orbital_period, state_derivs_wrt_mean_anomaly
from ..lambert import BranchFlag, parabolic_lambert
from .dataclasses import (
    GridWindow,
    ManualSeed,
    Seed,
    SeedLabel,
    SeedOrigin,
    SeedSettings,
    StationaryPoint,
)
from .landscape import StationarySearch

MIN_GRID_N: Final[int] = 32
PARABOLIC_FD_STEP: Final[float] = 1e-5
PARABOLIC_TOLERANCE: Final[float] = 1e-8
DISTANCE_TOLERANCE: Final[float] = 1e-8
ZERO_TOF_RUNGS: Final[int] = 3

_Candidate: TypeAlias = tuple[
    DesignPoint, StationaryClass, Optional[tuple[float, float]]
]
RefineFn: TypeAlias = Callable[[DesignPoint], DesignPoint]


def default_temporal_window(
    ctx: ScenarioContext,
) -> tuple[float, float, float, float]:
    """Departure epochs over two synodic periods, flight times from a fifth
    of the arrival period to two arrival periods."""
    arrival_period = orbital_period(ctx.arr, ctx.g)
    if math.isinf(ctx.synodic_period):
        span = 2.0 * ctx.longest_period
    else:
        span = 2.0 * ctx.synodic_period
    return 0.0, span, 0.2 * arrival_period, 2.0 * arrival_period


def default_tof_planes(ctx: ScenarioContext) -> tuple[float, ...]:
    arrival_period = orbital_period(ctx.arr, ctx.g)
    return tuple(float(f) * arrival_period for f in np.linspace(0.2, 2.0, 4))


def _check_grid(grid_n: int) -> None:
    if grid_n < MIN_GRID_N:
        raise ValueError(
            f"Asymptote landscapes need grid_n >= {MIN_GRID_N}, got {grid_n}"
        )


def _label(
    candidates: Iterable[_Candidate], origin: SeedOrigin, d1: BranchFlag
) -> list[Seed]:
    counters: dict[StationaryClass, int] = {}
    seeds = []
    for x, hclass, anchor in candidates:
        counters[hclass] = counters.get(hclass, 0) + 1
        label = SeedLabel(origin, d1, hclass, counters[hclass])
        seeds.append(Seed(x=x, label=label, anchor=anchor))
    return seeds


def _converge(
    points: Sequence[_Candidate], refine: RefineFn
) -> list[_Candidate]:
    converged: list[_Candidate] = []
    dropped = 0
    for x, hclass, anchor in points:
        try:
            refined = refine(x)
        except TiotError as error:
            logger.debug("Seed at %s did not re-converge: %s", anchor, error)
            dropped += 1
            continue
        converged.append((refined, hclass, anchor))
    if dropped:
        logger.warning(
            "Dropped %s of %s asymptotic seeds during re-convergence",
            dropped,
            len(points),
        )
    return converged


def parabolic_cost(z: Vector, ctx: ScenarioContext) -> float:
    departure = ctx.departure_state(float(z[0]))
    arrival = ctx.arrival_state(float(z[1]))
    arc = parabolic_lambert(departure.r, arrival.r, ctx.d1, ctx.g)
    return float(
        np.linalg.norm(arc.v1g - departure.v)
        + np.linalg.norm(arrival.v - arc.v2g)
    )


def parabolic_gradient(z: Vector, ctx: ScenarioContext) -> Vector:
    jacobian = central_difference(
        lambda w: np.array([parabolic_cost(w, ctx)]), z, PARABOLIC_FD_STEP
    )
    return jacobian.ravel()


def distance_gradient(z: Vector, ctx: ScenarioContext) -> Vector:
    """Gradient of the chord length between the two endpoints."""
    m1, m2 = float(z[0]), float(z[1])
    chord = ctx.departure_state(m1).r - ctx.arrival_state(m2).r
    length = float(np.linalg.norm(chord))
    if length == 0.0:
        return np.full(2, np.nan)
    direction = chord / length
    dr1, _ = state_derivs_wrt_mean_anomaly(ctx.dep, m1, ctx.g)
    dr2, _ = state_derivs_wrt_mean_anomaly(ctx.arr, m2, ctx.g)
    return np.array([direction @ dr1, -direction @ dr2])


@traced_function
def asymptotic_seeds_inf(
    ctx: ScenarioContext,
    grid_n: int = 64,
    t_seed: float = 2.5e4,
    dom: DerivDomain = DerivDomain.TEMPORAL,
    cfg: Optional[ContinuationConfig] = None,
    workers: int = 1,
) -> list[Seed]:
    _check_grid(grid_n)
    search = StationarySearch(
        lambda z: parabolic_gradient(z, ctx),
        GridWindow.angles(),
        (grid_n, grid_n),
        tol=PARABOLIC_TOLERANCE,
        hessian_step=1e-4,
        workers=workers,
    )
    points = search.run()
    if search.dropped:
        logger.warning(
            "Dropped %s parabolic landscape candidates", search.dropped
        )
    anchored = [
        (
            DesignPoint(float(p.z[0]), float(p.z[1]), t_seed),
            p.hclass,
            (float(p.z[0]), float(p.z[1])),
        )
        for p in points
    ]
    cfg = cfg or ContinuationConfig()
    converged = _converge(
        anchored, lambda x: refine_to_family(x, ctx, dom, cfg)
    )
    seeds = _label(converged, SeedOrigin.ASYMPTOTE_INF, ctx.d1)
    logger.info(
        "Found %s t->inf seeds on the %s branch", len(seeds), ctx.d1.value
    )
    return seeds


def _radius_extrema(
    ctx: ScenarioContext,
) -> list[tuple[float, float, StationaryClass]]:
    if ctx.dep.e == 0.0 or ctx.arr.e == 0.0:
        return []
    return [
        (0.0, 0.0, StationaryClass.MINIMUM),
        (math.pi, math.pi, StationaryClass.MAXIMUM),
        (0.0, math.pi, StationaryClass.SADDLE),
        (math.pi, 0.0, StationaryClass.SADDLE),
    ]


def distance_stationary_points(
    ctx: ScenarioContext, grid_n: int = 64, workers: int = 1
) -> list[tuple[float, float, StationaryClass]]:
    """Stationary points of the t -> 0 distance landscape of the branch."""
    _check_grid(grid_n)
    if ctx.d1 is BranchFlag.LONG:
        points = _radius_extrema(ctx)
        if not points:
            logger.warning(
                "Radius sum is degenerate for circular orbits; "
                "no t->0 seeds on the long branch"
            )
        return points

    search = StationarySearch(
        lambda z: distance_gradient(z, ctx),
        GridWindow.angles(),
        (grid_n, grid_n),
        tol=DISTANCE_TOLERANCE,
        hessian_step=1e-6,
        workers=workers,
    )
    found: list[StationaryPoint] = search.run()
    if search.dropped:
        logger.warning("Dropped %s chord landscape candidates", search.dropped)
    return [(float(p.z[0]), float(p.z[1]), p.hclass) for p in found]


def _zero_tof_refiner(
    ctx: ScenarioContext,
    t_zero: float,
    cfg: Optional[ContinuationConfig] = None,
) -> RefineFn:
    """Angular stationary point on the plane ``t = t_zero``, walked up
    from a shorter flight time where the distance landscape dominates."""
    cfg = cfg or ContinuationConfig()
    rungs = [t_zero / 2**k for k in reversed(range(ZERO_TOF_RUNGS))]

    def _refine(x: DesignPoint) -> DesignPoint:
        try:
            point = x
            for tof in rungs:
                point = refine_on_plane(
                    DesignPoint(point.m1, point.m2, tof),
                    ctx,
                    DerivDomain.ANGULAR,
                    cfg,
                )
            return point
        except TiotError as error:
            logger.debug("Walk to t=%s failed: %s", t_zero, error)
        return refine_on_plane(
            DesignPoint(x.m1, x.m2, t_zero), ctx, DerivDomain.ANGULAR, cfg
        )

    return _refine


@traced_function
def asymptotic_seeds_zero(
    ctx: ScenarioContext,
    grid_n: int = 64,
    t_zero: float = 100.0,
    cfg: Optional[ContinuationConfig] = None,
    workers: int = 1,
) -> list[Seed]:
    """Seeds of the angular domain's t -> 0 asymptotes, solved at the
    short flight time ``t_zero``."""
    anchored = [
        (DesignPoint(m1, m2, t_zero), hclass, (m1, m2))
        for m1, m2, hclass in distance_stationary_points(ctx, grid_n, workers)
    ]
    refine = _zero_tof_refiner(ctx, t_zero, cfg)
    converged = [
        (x, classify_stationary(hessian_fd(x, ctx, DerivDomain.ANGULAR)), a)
        for x, _, a in _converge(anchored, refine)
    ]
    seeds = _label(converged, SeedOrigin.ASYMPTOTE_ZERO, ctx.d1)
    logger.info(
        "Found %s t->0 seeds on the %s branch", len(seeds), ctx.d1.value
    )
    return seeds


def _temporal_grid(
    ctx: ScenarioContext,
    window: tuple[float, float, float, float],
    resolution: tuple[int, int],
    workers: int,
) -> list[_Candidate]:
    chart = TemporalChart(ctx)
    scale = ctx.time_scale
    t_lo, t_hi, tof_lo, tof_hi = window
    bounds = GridWindow(
        (t_lo / scale, tof_lo / scale), (t_hi / scale, tof_hi / scale)
    )
    search = StationarySearch(
        lambda z: gradient(chart.to_design(z), ctx, DerivDomain.TEMPORAL),
        bounds,
        resolution,
        workers=workers,
    )
    points = search.run()
    if search.dropped:
        logger.warning("Dropped %s temporal grid candidates", search.dropped)
    return [
        (
            chart.to_design(p.z),
            classify_stationary(p.hessian),
            None,
        )
        for p in points
    ]


def _angular_grid(
    ctx: ScenarioContext,
    tof_planes: Sequence[float],
    resolution: tuple[int, int],
    workers: int,
) -> list[_Candidate]:
    candidates: list[_Candidate] = []
    for tof in tof_planes:
        search = StationarySearch(
            lambda z, t=tof: gradient(
                DesignPoint(float(z[0]), float(z[1]), t),
                ctx,
                DerivDomain.ANGULAR,
            ),
            GridWindow.angles(),
            resolution,
            workers=workers,
        )
        points = search.run()
        if search.dropped:
            logger.warning(
                "Dropped %s candidates on the t=%s plane",
                search.dropped,
                tof,
            )
        candidates.extend(
            (
                DesignPoint(float(p.z[0]), float(p.z[1]), tof),
                classify_stationary(p.hessian),
                None,
            )
            for p in points
        )
    return candidates


@traced_function
def grid_seeds(
    ctx: ScenarioContext,
    dom: DerivDomain,
    window: Optional[tuple[float, float, float, float]] = None,
    resolution: tuple[int, int] = (64, 64),
    tof_planes: Optional[Sequence[float]] = None,
    workers: int = 1,
) -> list[Seed]:
    """Stationary points of the domain gradient on a search grid.

    Temporal windows are ``(T_lo, T_hi, t_lo, t_hi)`` in seconds; the
    angular domain searches full anomaly tori on constant-``t`` planes.
    """
    if dom is DerivDomain.TEMPORAL:
        candidates = _temporal_grid(
            ctx, window or default_temporal_window(ctx), resolution, workers
        )
    else:
        candidates = _angular_grid(
            ctx, tof_planes or default_tof_planes(ctx), resolution, workers
        )
    seeds = _label(candidates, SeedOrigin.GRID, ctx.d1)
    logger.info(
        "Found %s grid seeds on the %s branch", len(seeds), ctx.d1.value
    )
    return seeds


def manual_seeds(
    entries: Iterable[ManualSeed],
    ctx: ScenarioContext,
    dom: DerivDomain,
    cfg: Optional[ContinuationConfig] = None,
) -> list[Seed]:
    cfg = cfg or ContinuationConfig()
    candidates: list[_Candidate] = []
    for entry in entries:
        if entry.branch is not ctx.d1:
            continue
        try:
            x = refine_to_family(entry.x, ctx, dom, cfg)
            hclass = classify_stationary(hessian_fd(x, ctx, dom))
        except TiotError as error:
            logger.warning("Manual seed %s rejected: %s", entry.x, error)
            continue
        candidates.append((x, hclass, None))
    return _label(candidates, SeedOrigin.MANUAL, ctx.d1)


def collect_seeds(
    ctx: ScenarioContext,
    dom: DerivDomain,
    settings: SeedSettings,
    cfg: Optional[ContinuationConfig] = None,
    workers: int = 1,
) -> list[Seed]:
    seeds: list[Seed] = []
    if settings.uses(SeedOrigin.ASYMPTOTE_INF):
        seeds.extend(
            asymptotic_seeds_inf(
                ctx, settings.grid_n, settings.t_seed, dom, cfg, workers
            )
        )
    if settings.uses(SeedOrigin.ASYMPTOTE_ZERO):
        if dom is DerivDomain.ANGULAR:
            seeds.extend(
                asymptotic_seeds_zero(
                    ctx, settings.grid_n, settings.t_zero, cfg, workers
                )
            )
        else:
            logger.warning(
                "t->0 asymptotes seed angular-domain families only; "
                "skipping them for the %s domain",
                dom.value,
            )
    if settings.uses(SeedOrigin.GRID):
        seeds.extend(
            grid_seeds(
                ctx,
                dom,
                settings.window,
                settings.grid_resolution,
                settings.tof_planes,
                workers,
            )
        )
    if settings.uses(SeedOrigin.MANUAL):
        seeds.extend(manual_seeds(settings.manual, ctx, dom, cfg))
    return seeds
