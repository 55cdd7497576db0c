"""Acceptance gate: one test per published criterion, one PASS/FAIL line each.

Run with ``pytest -v tests/test_acceptance.py`` (add ``-s`` to see the lines
for passing criteria too).
"""

import math
import time

import numpy as np

from trifig import (
    Tolerances,
    check_pairing,
    check_pi,
    check_sine_rotation,
    check_two_pi,
    closure_residual,
    enumerate_patterns,
    measure_angles,
    realizability_verdict,
    realize,
)
from trifig.theorems import (
    BUILDERS,
    SCENARIO_NAMES,
    compare_to_oracle,
    draw_params,
    perturb_interior_angle,
    random_pairing_fan,
    random_polygon_figure,
    run_verification,
)
from trifig.theorems._geom import dist, similarity_align
from trifig.theorems.scenarios import build_morley_classic, build_morley_hexagon


def _verdict(num: int, desc: str, ok: bool, detail: str = "") -> None:
    tail = f"  [{detail}]" if detail else ""
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} — {desc}{tail}")
    assert ok, f"criterion {num} failed: {desc}{tail}"


def test_criterion_1_pattern_census():
    t0 = time.perf_counter()
    three = enumerate_patterns(3)
    four = enumerate_patterns(4)
    elapsed = time.perf_counter() - t0

    table1 = {"AA BB CC", "AA BC CB", "AB BC CA", "AB CA BC"}
    rows_ok = {str(c.canonical) for c in three} == table1 and len(three) == 4
    count_ok = len(four) == 10

    by_sig: dict = {}
    for c in four:
        by_sig[c.signature] = by_sig.get(c.signature, 0) + 1
    # published breakdown: 1 all-same, 1 alternating, 2 one-different,
    # 6 all-different
    published = {"ssss": 1, "sdsd": 1, "sddd": 2, "dddd": 6}
    breakdown_ok = by_sig == published

    _verdict(
        1, "pattern census: n=3 rows, n=4 count and signature breakdown",
        rows_ok and count_ok and breakdown_ok and elapsed < 1.0,
        f"n=3 rows {'ok' if rows_ok else 'MISMATCH'}; "
        f"n=4 classes={len(four)}; breakdown={by_sig} vs published {published}; "
        f"{elapsed:.2f}s")


def test_criterion_2_necessity_on_measured_polygons():
    t0 = time.perf_counter()
    worst_pi = worst_two_pi = worst_sine = -1.0
    ok = True
    for trial in range(200):
        rng = np.random.default_rng([2, trial])
        n = int(rng.integers(4, 13))
        figure, angles, _ = random_polygon_figure(rng, n)
        ok &= check_pi(figure, angles, 1e-7).passed
        ok &= check_two_pi(figure, angles, 1e-7).passed
        ok &= check_sine_rotation(figure, angles, 1e-10).passed
    elapsed = time.perf_counter() - t0
    _verdict(2, "π/2π within 1e-7 and sine-rotation within 1e-10 on 200 "
             "measured convex triangulations",
             ok and elapsed < 5.0, f"{elapsed:.2f}s")


def test_criterion_3_sufficiency_round_trip():
    worst_angle = worst_coord = 0.0
    for name in ("bisector_hexagon", "quadriceptor"):
        for trial in range(50):
            rng = np.random.default_rng([3, trial])
            sc = BUILDERS[name](*draw_params(name, rng))
            real = realize(sc.figure, sc.angles)
            back = measure_angles(real, sc.figure)
            for row_in, row_out in zip(sc.angles.values, back.values):
                worst_angle = max(worst_angle,
                                  max(abs(a - b) for a, b in zip(row_in, row_out)))
            worst_coord = max(worst_coord, compare_to_oracle(sc))
    _verdict(3, "assigned-map round trip: measured angles within 1e-7, "
             "oracle match within 1e-9·diameter",
             worst_angle < 1e-7 and worst_coord < 1e-9,
             f"angle dev {worst_angle:.2e}, coord dev {worst_coord:.2e}")


def test_criterion_4_last_triangle_closure():
    agree = 0
    worst_good = 0.0
    best_bad = float("inf")
    for trial in range(200):
        rng = np.random.default_rng([4, trial])
        n = int(rng.integers(3, 9))
        figure, angles = random_pairing_fan(rng, n)
        good = closure_residual(figure, angles, "O").worst
        worst_good = max(worst_good, good)
        good_check = check_sine_rotation(figure, angles).passed
        agree += (good < 1e-9) == good_check

        # violate the rotation product by 1% at one entering rim angle
        tri = int(rng.integers(0, n))
        rows = [list(r) for r in angles.values]
        slot = figure.triangles[tri].slot_of(f"R{tri}")
        a = rows[tri][slot]
        bumped = math.degrees(math.asin(min(1.0, 1.01 * math.sin(math.radians(a)))))
        if a > 90.0:
            bumped = 180.0 - bumped
        hub_slot = figure.triangles[tri].slot_of("O")
        rows[tri][hub_slot] -= bumped - a
        rows[tri][slot] = bumped
        from trifig import AngleAssignment
        bad_angles = AngleAssignment(tuple(tuple(r) for r in rows))
        bad = closure_residual(figure, bad_angles, "O").worst
        best_bad = min(best_bad, bad)
        bad_check = check_sine_rotation(figure, bad_angles).passed
        agree += (bad < 0.05) == bad_check
    _verdict(4, "closure residual <1e-9 on realizable fans, >0.05° under 1% "
             "sine violation, checker agreement 100%",
             worst_good < 1e-9 and best_bad > 0.05 and agree == 400,
             f"good {worst_good:.2e}, bad {best_bad:.3f}, agreement {agree}/400")


def test_criterion_5_morley_classic():
    t0 = time.perf_counter()
    report = run_verification("morley_classic", trials=100, seed=5)
    elapsed = time.perf_counter() - t0
    _verdict(5, "100 Morley triangles: equilateral and oracle match within "
             "1e-9", report.passed and elapsed < 2.0,
             f"claim {report.max_claim_dev:.2e}, coord "
             f"{report.max_coordinate_dev:.2e}, {elapsed:.2f}s")


def test_criterion_6_morley_hexagon():
    report = run_verification("morley_hexagon", trials=100, seed=6)

    A, B, C = 70.0, 60.0, 50.0
    eps = 1e-7
    hexa = build_morley_hexagon(A + eps / 3, B + eps / 3, C + eps / 3)
    classic = build_morley_classic(A, B, C)
    aligned = similarity_align(hexa.oracle, classic.oracle, keys=("A", "B"))
    diam = max(dist(p, q) for p in classic.oracle.values()
               for q in classic.oracle.values())
    limit_dev = max(dist(aligned[h], classic.oracle[c]) / diam
                    for h, c in (("P1", "W"), ("P2", "U"), ("P3", "V")))
    _verdict(6, "100 hexagon trials within 1e-9 plus classic-Morley limit "
             "within 1e-6", report.passed and limit_dev < 1e-6,
             f"claim {report.max_claim_dev:.2e}, limit {limit_dev:.2e}")


def test_criterion_7_remaining_theorem_campaigns():
    budgets = {
        "bisector_hexagon": {"bisector_concurrency": 1e-9},
        "incenter_equilateral": {"ip_over_pq": 1e-9, "qi_over_pq": 1e-9},
        "circle_chords": {"crossing_angle": 1e-9},
        "morley_partial": {"remaining_trisector_a": 1e-9,
                           "remaining_trisector_c": 1e-9},
        "semi_median": {"sine_identity_log": 1e-12, "concurrency": 1e-9},
        "quadriceptor": {"starred_map": 1e-9},
    }
    ok = True
    worst = {}
    for name, checks in budgets.items():
        for trial in range(100):
            rng = np.random.default_rng([7, trial])
            sc = BUILDERS[name](*draw_params(name, rng))
            for check, budget in checks.items():
                dev = sc.checks[check]
                worst[check] = max(worst.get(check, 0.0), dev)
                ok &= dev < budget
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    _verdict(7, "100-trial campaigns for the remaining named theorems",
             ok, detail)


def test_criterion_8_pairing_implies_sine_rotation():
    counterexamples = 0
    for trial in range(1000):
        rng = np.random.default_rng([8, trial])
        n = int(rng.integers(3, 9))
        figure, angles = random_pairing_fan(rng, n)
        if check_pairing(figure, angles).passed and \
                not check_sine_rotation(figure, angles).passed:
            counterexamples += 1
    _verdict(8, "pairing ⇒ sine-rotation on 1000 multiset-equal fans",
             counterexamples == 0, f"{counterexamples} counterexamples")


def test_criterion_9_perturbation_sensitivity():
    tol = Tolerances.measured()
    silent = 0
    for name in SCENARIO_NAMES:
        rng = np.random.default_rng([9, hash(name) % (2**32)])
        sc = BUILDERS[name](*draw_params(name, rng))
        for _ in range(100):
            bumped, _desc = perturb_interior_angle(sc.figure, sc.angles, rng,
                                                   magnitude=1e-3)
            verdict = realizability_verdict(sc.figure, bumped, tol)
            assert verdict.report("pi_sum").passed
            if verdict.realizable:
                silent += 1
    _verdict(9, "1e-3° perturbations (π restored) always trip a condition",
             silent == 0, f"{silent} silent acceptances over 800")
