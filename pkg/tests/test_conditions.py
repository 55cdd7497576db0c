import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trifig import (
    AngleAssignment,
    AngleError,
    Figure,
    Tolerances,
    check_pairing,
    check_pi,
    check_sine_rotation,
    check_two_pi,
    realizability_verdict,
    rim_angles,
)
from trifig.theorems import random_pairing_fan, random_wheel


def test_incenter_all_conditions(incenter_figure, incenter_angles):
    verdict = realizability_verdict(incenter_figure, incenter_angles)
    assert verdict.realizable
    assert verdict.via == "pairing_corollary"
    assert all(rep.passed for rep in verdict.reports.values())


def test_pi_violation_names_triangle(incenter_figure, incenter_angles):
    rows = list(incenter_angles.values)
    rows[1] = (30.0, 31.0, 120.0)
    report = check_pi(incenter_figure, AngleAssignment(tuple(rows)))
    assert not report.passed
    assert report.violations[0].locus == "T1"
    assert report.violations[0].residual == pytest.approx(1.0)


def test_two_pi_interior_violation(incenter_figure):
    rows = (("A", (30.0, 30.0, 120.0)),)
    angles = AngleAssignment(((31.0, 30.0, 119.0),) * 3)
    report = check_two_pi(incenter_figure, angles)
    assert not report.passed
    assert any(v.locus == "I" for v in report.violations)


def test_two_pi_exterior_is_one_sided(incenter_figure, incenter_angles):
    # exterior sums below 180 are fine; only overshoot is flagged
    report = check_two_pi(incenter_figure, incenter_angles)
    assert report.passed
    rows = ((40.0, 120.0, 20.0), (120.0, 40.0, 20.0), (30.0, 30.0, 120.0))
    report = check_two_pi(incenter_figure, AngleAssignment(rows))
    assert not report.passed
    assert any(v.locus == "B" and v.residual > 0 for v in report.violations)


def test_straight_perimeter_vertex_allowed():
    # two triangles sharing an edge, hinge opened to exactly 180
    fig = Figure([("A", "B", "D"), ("B", "C", "D")])
    angles = AngleAssignment(((40.0, 90.0, 50.0), (90.0, 40.0, 50.0)))
    report = check_two_pi(fig, angles)
    assert report.passed


def test_rim_angles_chain(incenter_figure, incenter_angles):
    pairs = rim_angles(incenter_figure, incenter_angles, "I")
    assert len(pairs) == 3
    assert all(p == (30.0, 30.0) for p in pairs)


def test_verdict_without_pairing_uses_theorem():
    # an off-centre hub still realizes (angles measured from coordinates)
    # but the rim multisets at the hub no longer match
    rng = np.random.default_rng(3)
    for attempt in range(20):
        figure, angles, _ = random_wheel(rng, 5)
        verdict = realizability_verdict(figure, angles, Tolerances.measured())
        assert verdict.realizable
        if verdict.via == "realizability_theorem":
            assert not verdict.report("pairing").passed
            assert verdict.report("sine_rotation").passed
            return
    pytest.fail("no wheel with unpaired rims found")


def test_pairing_detects_multiset_mismatch(incenter_figure):
    rows = ((29.0, 31.0, 120.0), (29.0, 31.0, 120.0), (29.0, 31.0, 120.0))
    angles = AngleAssignment(rows)
    # every rim value 29 pairs against a 31: pairing fails, sine-rotation
    # compares products and fails too
    assert not check_pairing(incenter_figure, angles).passed
    assert not check_sine_rotation(incenter_figure, angles).passed


def test_angle_domain_guard():
    with pytest.raises(AngleError):
        AngleAssignment.from_rows([(0.0, 90.0, 90.0)])
    with pytest.raises(AngleError):
        AngleAssignment.from_rows([(180.0, -0.5, 0.5)])


def test_row_count_must_match(incenter_figure):
    angles = AngleAssignment(((60.0, 60.0, 60.0),))
    with pytest.raises(AngleError):
        check_pi(incenter_figure, angles)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**9), n=st.integers(3, 8))
def test_pairing_implies_sine_rotation(seed, n):
    rng = np.random.default_rng(seed)
    figure, angles = random_pairing_fan(rng, n)
    assert check_pairing(figure, angles).passed
    assert check_sine_rotation(figure, angles).passed


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_measured_wheels_satisfy_all_conditions(seed):
    rng = np.random.default_rng(seed)
    figure, angles, _ = random_wheel(rng, int(rng.integers(3, 9)))
    tol = Tolerances.measured()
    assert check_pi(figure, angles, tol.pi_sum).passed
    assert check_two_pi(figure, angles, tol.two_pi).passed
    assert check_sine_rotation(figure, angles, tol.sine_log).passed
