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
from collections import Counter

import numpy as np
import pytest

from tiot_families.continuation import constraints
from tiot_families.cost import DerivDomain, DesignPoint, StationaryClass
from tiot_families.lambert import BranchFlag
from tiot_families.seeds import (
    GridWindow,
    Seed,
    SeedLabel,
    SeedOrigin,
    SeedSettings,
    StationarySearch,
    asymptotic_seeds_inf,
    asymptotic_seeds_zero,
    classify_point,
    collect_seeds,
    default_temporal_window,
    default_tof_planes,
    distance_gradient,
    distance_stationary_points,
    parabolic_gradient,
)


def _cosine_gradient(z: np.ndarray) -> np.ndarray:
    # gradient of -cos(u) - cos(v)
    return np.array([math.sin(z[0]), math.sin(z[1])])


def test_stationary_search_finds_all_torus_critical_points() -> None:
    window = GridWindow.angles()
    points = StationarySearch(_cosine_gradient, window, (16, 16)).run()

    assert [p.hclass for p in points] == [
        StationaryClass.MAXIMUM,
        StationaryClass.SADDLE,
        StationaryClass.SADDLE,
        StationaryClass.MINIMUM,
    ]
    expected = {
        StationaryClass.MAXIMUM: [(math.pi, math.pi)],
        StationaryClass.MINIMUM: [(0.0, 0.0)],
        StationaryClass.SADDLE: [(0.0, math.pi), (math.pi, 0.0)],
    }
    for point in points:
        assert point.residual < 1e-10
        assert min(
            window.distance(point.z, np.array(target))
            for target in expected[point.hclass]
        ) < 1e-8


def test_stationary_search_on_a_bounded_window() -> None:
    window = GridWindow((-1.0, -1.0), (1.0, 1.0))
    search = StationarySearch(lambda z: 2.0 * z - 0.25, window, (9, 9))
    points = search.run()
    assert len(points) == 1
    assert np.allclose(points[0].z, [0.125, 0.125])
    assert points[0].hclass is StationaryClass.MINIMUM
    assert search.dropped == 0


def test_stationary_search_rejects_tiny_grids() -> None:
    with pytest.raises(ValueError):
        StationarySearch(_cosine_gradient, GridWindow.angles(), (1, 8))


def test_classify_point_uses_relative_degeneracy() -> None:
    hclass, hessian = classify_point(np.diag([1e6, 1e-4]))
    assert hclass is StationaryClass.DEGENERATE
    assert hessian.eigenvalues[0] == pytest.approx(1e-4)
    hclass, _ = classify_point(np.diag([1e-3, 2e-3]))
    assert hclass is StationaryClass.MINIMUM


def test_grid_window_wraps_periodic_offsets() -> None:
    window = GridWindow.angles()
    first = np.array([0.1, 6.2])
    second = np.array([6.2, 0.1])
    assert window.distance(first, second) == pytest.approx(
        math.hypot(2.0 * math.pi - 6.1, 2.0 * math.pi - 6.1)
    )
    assert np.allclose(window.wrap(np.array([-0.5, 7.0])), [
        2.0 * math.pi - 0.5,
        7.0 - 2.0 * math.pi,
    ])


def test_grid_window_rejects_degenerate_bounds() -> None:
    with pytest.raises(ValueError):
        GridWindow((0.0, 1.0), (0.0, 2.0))
    with pytest.raises(ValueError):
        GridWindow((0.0, 0.0), (math.inf, 1.0))


def test_long_branch_zero_set_is_exact(coplanar_elliptic_ctx) -> None:
    points = distance_stationary_points(coplanar_elliptic_ctx)
    assert points == [
        (0.0, 0.0, StationaryClass.MINIMUM),
        (math.pi, math.pi, StationaryClass.MAXIMUM),
        (0.0, math.pi, StationaryClass.SADDLE),
        (math.pi, 0.0, StationaryClass.SADDLE),
    ]


def test_long_branch_zero_set_is_empty_for_circular_orbits(
    coplanar_circular_ctx,
) -> None:
    assert distance_stationary_points(coplanar_circular_ctx) == []


def test_short_branch_chord_extrema(baseline_ctx) -> None:
    ctx = baseline_ctx.with_branch(BranchFlag.SHORT)
    points = distance_stationary_points(ctx, grid_n=32)
    assert any(hclass is StationaryClass.MAXIMUM for *_, hclass in points)
    for m1, m2, _ in points:
        gradient = distance_gradient(np.array([m1, m2]), ctx)
        assert np.linalg.norm(gradient) < 1e-6


def test_distance_stationary_points_requires_fine_grid(baseline_ctx) -> None:
    with pytest.raises(ValueError):
        distance_stationary_points(baseline_ctx, grid_n=16)


def test_parabolic_gradient_is_finite(baseline_ctx) -> None:
    value = parabolic_gradient(np.array([0.4, 2.2]), baseline_ctx)
    assert value.shape == (2,)
    assert np.all(np.isfinite(value))


def test_seed_identifiers() -> None:
    label = SeedLabel(
        SeedOrigin.ASYMPTOTE_INF, BranchFlag.LONG, StationaryClass.SADDLE, 2
    )
    assert label.seed_id == "inf/l/s/2"
    assert str(label) == "inf/l/s/2"
    seed = Seed(DesignPoint(0.1, 0.2, 25000.0), label, (0.1, 0.2))
    assert seed.seed_id == "inf/l/s/2"
    assert seed.is_asymptotic


def test_seed_ordinals_start_at_one() -> None:
    with pytest.raises(ValueError):
        SeedLabel(
            SeedOrigin.GRID, BranchFlag.SHORT, StationaryClass.MINIMUM, 0
        )


@pytest.mark.parametrize(
    "text, origin",
    [
        ("inf", SeedOrigin.ASYMPTOTE_INF),
        ("asymptote_zero", SeedOrigin.ASYMPTOTE_ZERO),
        ("GRID", SeedOrigin.GRID),
        ("manual", SeedOrigin.MANUAL),
    ],
)
def test_seed_origin_parse(text: str, origin: SeedOrigin) -> None:
    assert SeedOrigin.parse(text) is origin


def test_seed_origin_parse_rejects_unknown() -> None:
    with pytest.raises(ValueError):
        SeedOrigin.parse("porkchop")


@pytest.mark.parametrize(
    "changes",
    [
        {"grid_n": 16},
        {"grid_resolution": (1, 64)},
        {"t_seed": 0.0},
        {"window": (0.0, 1000.0, 500.0, 100.0)},
        {"tof_planes": (3000.0, -1.0)},
    ],
)
def test_seed_settings_validation(changes: dict) -> None:
    with pytest.raises(ValueError):
        SeedSettings(**changes)


def test_default_windows(baseline_ctx) -> None:
    t_lo, t_hi, tof_lo, tof_hi = default_temporal_window(baseline_ctx)
    assert t_lo == 0.0
    assert t_hi == pytest.approx(2.0 * baseline_ctx.synodic_period)
    assert tof_hi == pytest.approx(10.0 * tof_lo)
    planes = default_tof_planes(baseline_ctx)
    assert len(planes) == 4
    assert planes[0] == pytest.approx(tof_lo)
    assert planes[-1] == pytest.approx(tof_hi)


@pytest.mark.parametrize("name", ["baseline", "coplanar_elliptic"])
def test_zero_tof_seeds_converge_on_every_anchor(
    name: str, request: pytest.FixtureRequest
) -> None:
    ctx = request.getfixturevalue(f"{name}_ctx")
    anchors = {
        (round(m1, 9), round(m2, 9))
        for m1, m2, _ in distance_stationary_points(ctx, 32)
    }
    seeds = asymptotic_seeds_zero(ctx, grid_n=32, t_zero=100.0)

    assert len(seeds) == 4
    classes = Counter(seed.label.hclass for seed in seeds)
    assert classes == {
        StationaryClass.MINIMUM: 1,
        StationaryClass.MAXIMUM: 1,
        StationaryClass.SADDLE: 2,
    }
    for seed in seeds:
        assert seed.label.origin is SeedOrigin.ASYMPTOTE_ZERO
        assert seed.seed_id.startswith("zero/l/")
        assert (round(seed.anchor[0], 9), round(seed.anchor[1], 9)) in anchors
        assert seed.x.tof == pytest.approx(100.0, rel=1e-12)
        residual = constraints(seed.x, ctx, DerivDomain.ANGULAR)
        assert np.linalg.norm(residual) < 1e-10
        offset = np.array(seed.x.wrapped()) - np.array(seed.anchor)
        offset = (offset + math.pi) % (2.0 * math.pi) - math.pi
        assert np.linalg.norm(offset) < 0.5


def test_temporal_collection_skips_zero_tof_seeds(
    coplanar_elliptic_ctx,
) -> None:
    settings = SeedSettings(
        grid_n=32, sources=frozenset({SeedOrigin.ASYMPTOTE_ZERO})
    )
    ctx = coplanar_elliptic_ctx
    assert collect_seeds(ctx, DerivDomain.TEMPORAL, settings) == []
    seeds = collect_seeds(ctx, DerivDomain.ANGULAR, settings)
    assert len(seeds) == 4


@pytest.mark.slow
def test_asymptote_seed_counts_survive_grid_doubling(baseline_ctx) -> None:
    coarse = asymptotic_seeds_inf(baseline_ctx, grid_n=32, workers=4)
    fine = asymptotic_seeds_inf(baseline_ctx, grid_n=64, workers=4)

    assert coarse
    assert Counter(s.label.hclass for s in coarse) == Counter(
        s.label.hclass for s in fine
    )
