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

import numpy as np
import pytest

from tiot_families.core.errors import DegenerateBurnError, TiotError
from tiot_families.cost import (
    AngularChart,
    DerivDomain,
    DesignPoint,
    ScenarioContext,
    StationaryClass,
    TemporalChart,
    burn_direction,
    classify_stationary,
    evaluate_cost,
    evaluate_j,
    explicit_tof_sensitivity,
    gradient,
    hessian_fd,
    hessian_from_matrix,
    lambert_velocity_sensitivities,
    transfer_arc,
)
from tiot_families.lambert import solve_lambert


def _fd_angular(x: DesignPoint, ctx: ScenarioContext, h: float = 1e-5):
    return np.array(
        [
            (
                evaluate_j(DesignPoint(x.m1 + h, x.m2, x.tof), ctx)
                - evaluate_j(DesignPoint(x.m1 - h, x.m2, x.tof), ctx)
            )
            / (2 * h),
            (
                evaluate_j(DesignPoint(x.m1, x.m2 + h, x.tof), ctx)
                - evaluate_j(DesignPoint(x.m1, x.m2 - h, x.tof), ctx)
            )
            / (2 * h),
        ]
    )


def _fd_temporal(x: DesignPoint, ctx: ScenarioContext, h: float = 1e-5):
    chart = TemporalChart(ctx)
    z = chart.from_design(x)
    columns = []
    for k in range(2):
        step = np.zeros(2)
        step[k] = h
        ahead = evaluate_j(chart.to_design(z + step), ctx)
        behind = evaluate_j(chart.to_design(z - step), ctx)
        columns.append((ahead - behind) / (2 * h))
    return np.array(columns)


def _close(analytic: np.ndarray, numeric: np.ndarray) -> bool:
    return bool(
        np.linalg.norm(analytic - numeric)
        <= 1e-5 * np.linalg.norm(numeric) + 1e-9
    )


def test_angular_gradient_matches_finite_differences(
    any_ctx, design_points
) -> None:
    for x in design_points(any_ctx, 8):
        analytic = gradient(x, any_ctx, DerivDomain.ANGULAR)
        assert _close(analytic, _fd_angular(x, any_ctx))


def test_temporal_gradient_matches_finite_differences(
    any_ctx, design_points
) -> None:
    for x in design_points(any_ctx, 8):
        # the chart must reproduce x exactly for the comparison
        chart = TemporalChart(any_ctx)
        x = chart.to_design(chart.from_design(x))
        analytic = gradient(x, any_ctx, DerivDomain.TEMPORAL)
        assert _close(analytic, _fd_temporal(x, any_ctx))


@pytest.mark.slow
def test_gradients_on_many_random_points(any_ctx, design_points) -> None:
    for x in design_points(any_ctx, 70):
        assert _close(
            gradient(x, any_ctx, DerivDomain.ANGULAR), _fd_angular(x, any_ctx)
        )


def test_explicit_tof_derivative_matches_finite_differences(
    baseline_ctx, design_points
) -> None:
    h = 1e-2
    for x in design_points(baseline_ctx, 5):
        ahead = evaluate_j(DesignPoint(x.m1, x.m2, x.tof + h), baseline_ctx)
        behind = evaluate_j(DesignPoint(x.m1, x.m2, x.tof - h), baseline_ctx)
        numeric = (ahead - behind) / (2 * h) * baseline_ctx.time_scale
        analytic = explicit_tof_sensitivity(x, baseline_ctx).djdt
        assert analytic == pytest.approx(numeric, rel=1e-5, abs=1e-9)


def test_temporal_gradient_combines_angular_terms(
    baseline_ctx, design_points
) -> None:
    x = design_points(baseline_ctx, 1)[0]
    cost = evaluate_cost(x, baseline_ctx)
    scale = baseline_ctx.time_scale
    n1, n2 = baseline_ctx.n1, baseline_ctx.n2
    assert cost.djdT == pytest.approx(
        scale * (n1 * cost.djdm1 + n2 * cost.djdm2)
    )
    assert cost.djdt_total == pytest.approx(
        scale * n2 * cost.djdm2 + cost.djdtof_explicit
    )


def test_cost_is_sum_of_burn_magnitudes(baseline_ctx, design_points) -> None:
    x = design_points(baseline_ctx, 1)[0]
    cost = evaluate_cost(x, baseline_ctx)
    assert cost.j == pytest.approx(
        np.linalg.norm(cost.dv1) + np.linalg.norm(cost.dv2)
    )
    assert cost.j == pytest.approx(evaluate_j(x, baseline_ctx))


def test_cost_is_periodic_in_anomalies(baseline_ctx, design_points) -> None:
    x = design_points(baseline_ctx, 1)[0]
    shifted = DesignPoint(x.m1 + 2 * math.pi, x.m2 - 2 * math.pi, x.tof)
    assert evaluate_j(shifted, baseline_ctx) == pytest.approx(
        evaluate_j(x, baseline_ctx), rel=1e-10
    )


_DECAY_TIMES = (2.0e4, 4.0e4, 8.0e4)


def _endpoints(ctx: ScenarioContext, rng, count: int = 20):
    """Angle pairs whose explicit rates evaluate at every sample time."""
    found = []
    while len(found) < count:
        m1, m2 = (float(v) for v in rng.uniform(0.0, 2.0 * math.pi, 2))
        try:
            rates = [
                explicit_tof_sensitivity(DesignPoint(m1, m2, t), ctx).djdt
                for t in _DECAY_TIMES
            ]
        except TiotError:
            continue
        if all(rate != 0.0 for rate in rates):
            found.append((m1, m2, np.abs(rates)))
    return found


def test_explicit_tof_sensitivity_decays_for_long_flights(
    baseline_ctx, rng
) -> None:
    endpoints = _endpoints(baseline_ctx, rng)
    ratios = [rates[0] / rates[2] for *_, rates in endpoints]
    # quadrupling t divides the rate by about 4^(5/3)
    assert np.median(ratios) == pytest.approx(4.0 ** (5.0 / 3.0), rel=0.3)

    scaled = np.array([rates * _DECAY_TIMES for *_, rates in endpoints])
    medians = np.median(scaled, axis=0)
    assert np.all(np.diff(medians) < 0.0)


def test_temporal_gradient_tends_to_the_weighted_angular_gradient(
    baseline_ctx, rng
) -> None:
    ctx = baseline_ctx
    shares = []
    for m1, m2, _ in _endpoints(ctx, rng):
        share = []
        for t in _DECAY_TIMES:
            x = DesignPoint(m1, m2, t)
            djdm1, djdm2 = gradient(x, ctx, DerivDomain.ANGULAR)
            djdT, djdt = gradient(x, ctx, DerivDomain.TEMPORAL)
            weighted = ctx.time_scale * ctx.n2 * djdm2
            assert djdT == pytest.approx(
                ctx.time_scale * (ctx.n1 * djdm1 + ctx.n2 * djdm2),
                rel=1e-9,
                abs=1e-12,
            )
            share.append(abs(djdt - weighted) / max(abs(djdt), 1e-12))
        shares.append(share)
    medians = np.median(np.array(shares), axis=0)
    assert np.all(np.diff(medians) < 0.0)
    assert medians[-1] < 0.5 * medians[0]



def test_burn_direction_rejects_vanishing_burns() -> None:
    with pytest.raises(DegenerateBurnError):
        burn_direction(np.zeros(3))


def test_angular_chart_round_trip(baseline_ctx) -> None:
    chart = AngularChart(baseline_ctx, 5000.0)
    x = chart.to_design(np.array([0.3, 1.2]))
    assert x == DesignPoint(0.3, 1.2, 5000.0)
    assert np.allclose(chart.from_design(x), [0.3, 1.2])


def test_temporal_chart_advances_anomalies(baseline_ctx) -> None:
    chart = TemporalChart(baseline_ctx)
    z = np.array([3.0, 4.0])
    x = chart.to_design(z)
    scale = baseline_ctx.time_scale
    assert x.tof == pytest.approx(4.0 * scale)
    assert x.m1 == pytest.approx(
        baseline_ctx.n1 * 3.0 * scale + baseline_ctx.dep.m0
    )
    assert x.m2 == pytest.approx(
        baseline_ctx.n2 * 7.0 * scale + baseline_ctx.arr.m0
    )
    assert np.allclose(chart.from_design(x), z)


@pytest.mark.parametrize(
    "matrix, expected",
    [
        ([[2.0, 0.0], [0.0, 1.0]], StationaryClass.MINIMUM),
        ([[-2.0, 0.5], [0.5, -1.0]], StationaryClass.MAXIMUM),
        ([[1.0, 0.0], [0.0, -3.0]], StationaryClass.SADDLE),
        ([[1.0, 0.0], [0.0, 1e-12]], StationaryClass.DEGENERATE),
    ],
)
def test_classify_stationary(
    matrix: list[list[float]], expected: StationaryClass
) -> None:
    assert classify_stationary(np.array(matrix)) is expected
    assert classify_stationary(hessian_from_matrix(matrix)) is expected


def test_hessian_is_symmetrized() -> None:
    hessian = hessian_from_matrix(np.array([[1.0, 0.2], [0.0, 3.0]]))
    assert np.allclose(hessian.matrix, hessian.matrix.T)
    assert hessian.asymmetry == pytest.approx(0.2)


def test_velocity_sensitivities_match_perturbed_solves(
    baseline_ctx, design_points
) -> None:
    ctx = baseline_ctx
    (x,) = design_points(ctx, 1)
    arc = transfer_arc(x, ctx)
    sens = lambert_velocity_sensitivities(x, ctx)
    h = 1e-2

    for k in range(3):
        step = np.zeros(3)
        step[k] = h
        plus = solve_lambert(arc.r1, arc.r2 + step, x.tof, ctx.d1, ctx.g)
        minus = solve_lambert(arc.r1, arc.r2 - step, x.tof, ctx.d1, ctx.g)
        column = (plus.v1g - minus.v1g) / (2 * h)
        assert column == pytest.approx(sens.dv1_dr2[:, k], rel=1e-4, abs=1e-9)

        plus = solve_lambert(arc.r1 + step, arc.r2, x.tof, ctx.d1, ctx.g)
        minus = solve_lambert(arc.r1 - step, arc.r2, x.tof, ctx.d1, ctx.g)
        column = (plus.v1g - minus.v1g) / (2 * h)
        assert column == pytest.approx(sens.dv1_dr1[:, k], rel=1e-4, abs=1e-9)


@pytest.mark.parametrize("dom", list(DerivDomain))
def test_domain_hessian_is_nearly_symmetric(
    any_ctx, design_points, dom
) -> None:
    for x in design_points(any_ctx, 2):
        hessian = hessian_fd(x, any_ctx, dom)
        scale = float(np.max(np.abs(hessian.matrix)))
        assert hessian.matrix.shape == (2, 2)
        assert hessian.asymmetry <= 1e-4 * scale
        assert np.allclose(hessian.matrix, hessian.matrix.T)
