"""Realizability of angle assignments on triangulated plane figures."""

from .figure import (
    Figure,
    FigureError,
    Triangle,
    Fan,
    ValidationReport,
    classify_vertices,
    parse_document,
    parse_figure,
    serialize_figure,
    validate_structure,
)
from .conditions import (
    AngleAssignment,
    AngleError,
    ConditionReport,
    Tolerances,
    Verdict,
    check_pairing,
    check_pi,
    check_sine_rotation,
    check_two_pi,
    realizability_verdict,
    rim_angles,
)
from .realize import (
    ClosureResidual,
    Realization,
    RealizationError,
    closure_residual,
    measure_angles,
    realize,
    verify_convex,
)
from .patterns import (
    PairingPattern,
    PatternClass,
    canonical_form,
    classify_pattern,
    enumerate_patterns,
    pattern_to_constraints,
)
from .svg import render_svg

__version__ = "0.1.0"
