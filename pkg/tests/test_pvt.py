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
import numpy as np
import pytest

from tiot_families.continuation import Family, TerminationReason
from tiot_families.cost import DerivDomain, StationaryClass, burn_direction
from tiot_families.lambert import BranchFlag
from tiot_families.pvt import (
    DEFAULT_PVT_TOLERANCE,
    PrimerHistory,
    annotate_family,
    check_pvt,
    member_satisfies_pvt,
    primer_history,
    pvt_interval_violations,
)


def _history(peak: float, where: int = 50) -> PrimerHistory:
    tau = np.linspace(0.0, 1.0, 101)
    pmag = np.ones_like(tau) * 0.9
    pmag[0] = pmag[-1] = 1.0
    pmag[where] = peak
    p = np.column_stack((pmag, np.zeros_like(tau), np.zeros_like(tau)))
    return PrimerHistory(tau=tau, p=p, pmag=pmag, boundary_residual=0.0)


def test_pvt_boundary_is_inclusive() -> None:
    assert check_pvt(_history(1.0 + DEFAULT_PVT_TOLERANCE))
    assert check_pvt(_history(0.95))


def test_pvt_rejects_interior_peak() -> None:
    assert not check_pvt(_history(1.2))
    assert not check_pvt(_history(1.0 + 2.0 * DEFAULT_PVT_TOLERANCE))


def test_pvt_ignores_samples_at_the_burns() -> None:
    history = _history(0.95)
    pmag = history.pmag.copy()
    pmag[0] = 1.5
    shifted = PrimerHistory(
        tau=history.tau, p=history.p, pmag=pmag, boundary_residual=0.0
    )
    assert check_pvt(shifted)


def test_primer_history_validation() -> None:
    with pytest.raises(ValueError):
        PrimerHistory(
            tau=np.array([0.0, 1.0, 1.0]),
            p=np.zeros((3, 3)),
            pmag=np.ones(3),
            boundary_residual=0.0,
        )
    with pytest.raises(ValueError):
        PrimerHistory(
            tau=np.array([0.0]),
            p=np.zeros((1, 3)),
            pmag=np.ones(1),
            boundary_residual=0.0,
        )


def test_primer_matches_burn_directions(
    make_member, design_points, baseline_ctx
) -> None:
    x = design_points(baseline_ctx, 1)[0]
    member = make_member(x.m1, x.m2, 4000.0)
    history = primer_history(member, baseline_ctx, n_samples=50)

    assert len(history) == 50
    assert history.duration == pytest.approx(4000.0)
    assert history.boundary_residual < 1e-6
    assert np.allclose(
        history.p[0], burn_direction(member.cost.dv1), atol=1e-6
    )
    assert np.allclose(
        history.p[-1], burn_direction(member.cost.dv2), atol=1e-6
    )
    assert history.pmag[0] == pytest.approx(1.0, abs=1e-6)


def test_primer_history_needs_samples(make_member, baseline_ctx) -> None:
    with pytest.raises(ValueError):
        primer_history(make_member(0.8, 2.5, 4000.0), baseline_ctx, 2)


def _family(members, end=TerminationReason.TOF_ABOVE_MAX) -> Family:
    return Family(
        members=tuple(members),
        end1=end,
        end2=end,
        domain=DerivDomain.TEMPORAL,
        d1=BranchFlag.LONG,
        seed_id="grid/l/m/1",
    )


def test_annotate_family_records_verdicts(
    make_member, design_points, baseline_ctx
) -> None:
    x = design_points(baseline_ctx, 1)[0]
    family = _family(
        [make_member(x.m1, x.m2, tof) for tof in (3000.0, 4000.0, 5000.0)]
    )
    annotated = annotate_family(family, baseline_ctx, n_samples=60)
    assert len(annotated) == len(family)
    for before, after in zip(family.members, annotated.members):
        assert before.pvt_ok is None
        assert after.x == before.x
        assert after.pvt_ok is member_satisfies_pvt(
            before, baseline_ctx, 60
        )


def test_isolated_pvt_members_are_reported(make_member) -> None:
    flags = [False, True, False, True, True]
    members = [
        make_member(0.8, 2.5, 3000.0 + 200.0 * k, pvt_ok=ok)
        for k, ok in enumerate(flags)
    ]
    assert pvt_interval_violations(_family(members)) == [1]


def test_isolated_saddles_are_not_reported(make_member) -> None:
    members = [
        make_member(0.8, 2.5, 3000.0, pvt_ok=False),
        make_member(
            0.8, 2.5, 3200.0, hclass=StationaryClass.SADDLE, pvt_ok=True
        ),
        make_member(0.8, 2.5, 3400.0, pvt_ok=False),
    ]
    assert pvt_interval_violations(_family(members)) == []


def test_pvt_verdicts_survive_sample_doubling(
    make_member, design_points, baseline_ctx
) -> None:
    for x in design_points(baseline_ctx, 5):
        member = make_member(x.m1, x.m2, x.tof)
        coarse = primer_history(member, baseline_ctx, n_samples=400)
        fine = primer_history(member, baseline_ctx, n_samples=800)

        assert fine.interior_max() == pytest.approx(
            coarse.interior_max(), abs=1e-2
        )
        assert member_satisfies_pvt(
            member, baseline_ctx, 400
        ) is member_satisfies_pvt(member, baseline_ctx, 800)


def _longest_optimal_run(family: Family) -> int:
    best = run = 0
    for member in family.members:
        optimal = (
            member.hclass is StationaryClass.MINIMUM and member.pvt_ok is True
        )
        run = run + 1 if optimal else 0
        best = max(best, run)
    return best


@pytest.mark.slow
def test_baseline_has_an_optimal_family_segment(baseline_run) -> None:
    atlas = baseline_run.branch(BranchFlag.LONG).atlas
    assert atlas is not None
    assert any(_longest_optimal_run(entry.family) >= 2 for entry in atlas)
