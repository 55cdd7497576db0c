import numpy as np
import pytest

from trifig import Tolerances, realizability_verdict
from trifig.theorems import (
    BUILDERS,
    OracleError,
    SCENARIO_NAMES,
    compare_to_oracle,
    draw_params,
    perturb_interior_angle,
    run_verification,
)
from trifig.theorems._geom import dist, similarity_align
from trifig.theorems.scenarios import (
    build_morley_classic,
    build_morley_hexagon,
    build_semi_median,
    semi_median_foot,
)

FIXED_PARAMS = {
    "morley_classic": (70.0, 60.0, 50.0),
    "morley_hexagon": (80.0, 95.0, 110.0),
    "bisector_hexagon": (100.0, 130.0, 110.0, 380.0 / 3.0),
    "semi_median": (70.0, 60.0, 50.0, 12.0),
    "incenter_equilateral": (70.0, 60.0, 50.0),
    "quadriceptor": (13.0, 17.0, 15.0),
    "circle_chords": (40.0, 100.0),
    "morley_partial": (70.0, 60.0, 50.0),
}


@pytest.mark.parametrize("name", SCENARIO_NAMES)
def test_scenario_claims_hold(name):
    sc = BUILDERS[name](*FIXED_PARAMS[name])
    assert sc.worst_check() < 1e-11, sc.checks


@pytest.mark.parametrize("name", SCENARIO_NAMES)
def test_scenario_maps_are_realizable(name):
    sc = BUILDERS[name](*FIXED_PARAMS[name])
    verdict = realizability_verdict(sc.figure, sc.angles, Tolerances.measured())
    assert verdict.realizable


@pytest.mark.parametrize("name", SCENARIO_NAMES)
def test_realizer_matches_oracle(name):
    sc = BUILDERS[name](*FIXED_PARAMS[name])
    assert compare_to_oracle(sc) < 1e-11


def test_pairing_certificates():
    # every catalog entry except the semi-median carries a paired fan map
    for name in SCENARIO_NAMES:
        sc = BUILDERS[name](*FIXED_PARAMS[name])
        verdict = realizability_verdict(sc.figure, sc.angles,
                                        Tolerances.measured())
        if name == "semi_median":
            assert verdict.via == "realizability_theorem"
        else:
            assert verdict.via == "pairing_corollary", name


@pytest.mark.parametrize("name,params", [
    ("morley_classic", (70.0, 60.0, 40.0)),       # sum != 180
    ("semi_median", (70.0, 60.0, 50.0, 40.0)),    # delta too large
    ("circle_chords", (100.0, 40.0)),             # alpha > beta
    ("quadriceptor", (20.0, 20.0, 20.0)),         # sum != 45
    ("bisector_hexagon", (100.0, 100.0, 100.0, 100.0)),
])
def test_domain_guards(name, params):
    with pytest.raises(OracleError):
        BUILDERS[name](*params)


def test_hexagon_collapses_to_classic_morley():
    A, B, C = 70.0, 60.0, 50.0
    eps = 1e-7
    hexa = build_morley_hexagon(A + eps / 3, B + eps / 3, C + eps / 3)
    classic = build_morley_classic(A, B, C)
    # inner vertices: P1 (between corners A and B) matches W (near side AB),
    # P2 matches U (near BC), P3 matches V (near CA)
    aligned = similarity_align(hexa.oracle, classic.oracle, keys=("A", "B"))
    diam = max(dist(p, q) for p in classic.oracle.values()
               for q in classic.oracle.values())
    for hex_label, classic_label in (("P1", "W"), ("P2", "U"), ("P3", "V"),
                                     ("G", "C")):
        assert dist(aligned[hex_label], classic.oracle[classic_label]) / diam \
            < 1e-6


def test_semi_median_limit_is_median():
    foot, mid, diam = semi_median_foot(70.0, 60.0, 50.0, 1e-7)
    assert dist(foot, mid) / diam < 1e-6


def test_semi_median_splits_follow_sine_relation():
    sc = build_semi_median(80.0, 55.0, 45.0, 9.0)
    assert sc.checks["split_angle_formula"] < 1e-9


@pytest.mark.parametrize("name", SCENARIO_NAMES)
def test_small_campaigns_pass(name):
    report = run_verification(name, trials=8, seed=42)
    assert report.passed, report.failures[:2]
    assert report.max_claim_dev < 1e-9
    assert report.max_coordinate_dev < 1e-9


def test_campaign_determinism():
    a = run_verification("quadriceptor", trials=5, seed=9)
    b = run_verification("quadriceptor", trials=5, seed=9)
    assert [r.params for r in a.records] == [r.params for r in b.records]
    assert [r.claim_dev for r in a.records] == [r.claim_dev for r in b.records]


def test_stress_campaigns_within_relaxed_budget():
    for name in ("morley_classic", "bisector_hexagon"):
        report = run_verification(name, trials=8, seed=3, stress=True,
                                  claim_tol=1e-6, coordinate_tol=1e-6)
        assert report.passed, report.failures[:2]


def test_draw_params_respect_domains():
    rng = np.random.default_rng(0)
    for name in SCENARIO_NAMES:
        for _ in range(5):
            BUILDERS[name](*draw_params(name, rng))


def test_perturbation_is_never_silently_accepted():
    rng = np.random.default_rng(1)
    sc = BUILDERS["incenter_equilateral"](70.0, 60.0, 50.0)
    tol = Tolerances.measured()
    for _ in range(10):
        bumped, _desc = perturb_interior_angle(sc.figure, sc.angles, rng)
        verdict = realizability_verdict(sc.figure, bumped, tol)
        assert verdict.report("pi_sum").passed  # restored within the triangle
        assert not verdict.realizable
