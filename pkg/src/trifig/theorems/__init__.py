"""Catalog of classical-geometry scenarios with independent oracles, plus
randomized verification campaigns comparing them against the realizer."""

from .campaign import (
    TrialRecord,
    VerificationReport,
    compare_to_oracle,
    draw_params,
    perturb_interior_angle,
    random_convex_polygon,
    random_pairing_fan,
    random_polygon_figure,
    random_wheel,
    run_verification,
)
from .scenarios import BUILDERS, SCENARIO_NAMES, Scenario
from ._geom import OracleError

__all__ = [
    "BUILDERS", "SCENARIO_NAMES", "Scenario", "OracleError",
    "TrialRecord", "VerificationReport", "compare_to_oracle", "draw_params",
    "perturb_interior_angle", "random_convex_polygon", "random_pairing_fan",
    "random_polygon_figure", "random_wheel", "run_verification",
]
