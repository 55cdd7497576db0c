"""Realizability conditions for angle assignments on triangulated figures.

An angle assignment maps every triangle corner to a size in degrees.  It is
realizable by an actual plane figure exactly when three conditions hold: each
triangle's angles sum to 180, the angles around each vertex sum to 360
(interior) or at most 180 (exterior), and around every interior vertex the
product of sines of the "entering" rim angles equals that of the "exiting"
ones.  A stronger, purely combinatorial certificate is multiset equality of
those two rim-angle families (the pairing check).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .figure import Figure, FigureError

PI_SUM = "pi_sum"
TWO_PI = "two_pi"
SINE_ROTATION = "sine_rotation"
PAIRING = "pairing"


class AngleError(ValueError):
    """Missing or out-of-range angle value."""


@dataclass(frozen=True)
class AngleAssignment:
    """Per-corner angle sizes in degrees, aligned with the triangle list."""

    values: tuple[tuple[float, float, float], ...]

    @classmethod
    def from_rows(cls, rows) -> "AngleAssignment":
        vals = tuple(tuple(float(x) for x in row) for row in rows)
        for i, row in enumerate(vals):
            if len(row) != 3:
                raise AngleError(f"triangle {i}: expected 3 angle values")
            for j, x in enumerate(row):
                if not (0.0 < x < 180.0):
                    raise AngleError(f"triangle {i} corner {j}: angle {x} outside (0, 180)")
        return cls(vals)

    def get(self, tri_index: int, slot: int) -> float:
        try:
            return self.values[tri_index][slot]
        except IndexError as exc:
            raise AngleError(f"no angle for triangle {tri_index} corner {slot}") from exc

    def at_vertex(self, figure: Figure, v: str) -> list[float]:
        """Angle sizes assigned at v, one per incident triangle, in fan order."""
        fan = figure.fan(v)
        return [self.get(i, figure.triangles[i].slot_of(v)) for i in fan.order]

    def rows(self):
        return [list(row) for row in self.values]


@dataclass(frozen=True)
class ConditionViolation:
    locus: str
    residual: float
    detail: str


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    passed: bool
    violations: tuple[ConditionViolation, ...] = ()

    def __str__(self) -> str:
        head = f"{self.condition}: {'pass' if self.passed else 'FAIL'}"
        lines = [f"  {v.locus}: residual {v.residual:.9g} ({v.detail})" for v in self.violations]
        return "\n".join([head] + lines)


@dataclass(frozen=True)
class Tolerances:
    """Default budgets suit hand-authored exact maps; loosen for measured ones."""

    pi_sum: float = 1e-9          # degrees, absolute
    two_pi: float = 1e-9          # degrees, absolute
    sine_log: float = 1e-9        # log-sine domain
    pairing: float = 1e-9         # degrees, per matched value

    @classmethod
    def measured(cls) -> "Tolerances":
        return cls(pi_sum=1e-7, two_pi=1e-7, sine_log=1e-10, pairing=1e-7)


@dataclass(frozen=True)
class Verdict:
    realizable: bool
    via: str  # "pairing_corollary" or "realizability_theorem"
    reports: dict = field(default_factory=dict)

    def report(self, condition: str) -> ConditionReport:
        return self.reports[condition]

    def __str__(self) -> str:
        head = ("realizable" if self.realizable else "not realizable") + f" (via {self.via})"
        return "\n".join([head] + [str(self.reports[c])
                                   for c in (PI_SUM, TWO_PI, SINE_ROTATION, PAIRING)])


def _check_total(figure: Figure, angles: AngleAssignment) -> None:
    if len(angles.values) != len(figure.triangles):
        raise AngleError(
            f"assignment covers {len(angles.values)} triangles, figure has {len(figure.triangles)}"
        )


def check_pi(figure: Figure, angles: AngleAssignment, tol: float = 1e-9) -> ConditionReport:
    """Each triangle's three angles must sum to 180 degrees."""
    _check_total(figure, angles)
    violations = []
    for t in figure.triangles:
        s = sum(angles.values[t.index])
        if abs(s - 180.0) > tol:
            violations.append(ConditionViolation(
                f"T{t.index}", s - 180.0, f"corner sum {s:.9g}"))
    return ConditionReport(PI_SUM, not violations, tuple(violations))


def check_two_pi(figure: Figure, angles: AngleAssignment, tol: float = 1e-9) -> ConditionReport:
    """Angle sum at a vertex: exactly 360 if interior, at most 180 if exterior.

    The exterior bound is one-sided; an exact 180 (straight perimeter vertex)
    is legitimate.
    """
    _check_total(figure, angles)
    violations = []
    for v in figure.vertices:
        fan = figure.fan(v)
        total = math.fsum(angles.at_vertex(figure, v))
        if fan.closed:
            if abs(total - 360.0) > tol:
                violations.append(ConditionViolation(
                    v, total - 360.0, f"interior vertex sum {total:.9g}"))
        elif total > 180.0 + tol:
            violations.append(ConditionViolation(
                v, total - 180.0, f"exterior vertex sum {total:.9g}"))
    return ConditionReport(TWO_PI, not violations, tuple(violations))


def rim_angles(figure: Figure, angles: AngleAssignment, v: str):
    """Entering/exiting rim angle pairs around an interior vertex, fan order.

    Each fan triangle contributes (enter, exit): the angle at the corner
    shared with the previous fan triangle and at the one shared with the next.
    """
    fan = figure.fan(v)
    if not fan.closed:
        raise FigureError(f"vertex {v!r} is not interior")
    pairs = []
    for i, (enter_label, exit_label) in zip(fan.order, fan.rim):
        t = figure.triangles[i]
        pairs.append((angles.get(i, t.slot_of(enter_label)),
                      angles.get(i, t.slot_of(exit_label))))
    return pairs


def _log_sin(deg: float) -> float:
    if not (0.0 < deg < 180.0):
        raise AngleError(f"angle {deg} outside (0, 180): sine sign/zero hazard")
    return math.log(math.sin(math.radians(deg)))


def check_sine_rotation(figure: Figure, angles: AngleAssignment,
                        tol: float = 1e-9) -> ConditionReport:
    """Product of sines of entering rim angles equals that of exiting ones.

    Compared as sums of log-sines; the reported residual lives in that log
    domain, which makes ``tol`` a relative tolerance on the products.
    """
    _check_total(figure, angles)
    violations = []
    for v in figure.interior_vertices():
        pairs = rim_angles(figure, angles, v)
        log_enter = math.fsum(_log_sin(a) for a, _ in pairs)
        log_exit = math.fsum(_log_sin(b) for _, b in pairs)
        residual = log_enter - log_exit
        if abs(residual) > tol:
            violations.append(ConditionViolation(
                v, residual, f"log sine-product mismatch at interior vertex"))
    return ConditionReport(SINE_ROTATION, not violations, tuple(violations))


def check_pairing(figure: Figure, angles: AngleAssignment,
                  tol: float = 1e-9) -> ConditionReport:
    """Entering and exiting rim angles form identical multisets (within tol).

    Sorted greedy matching, which is optimal for one-dimensional multisets.
    """
    _check_total(figure, angles)
    violations = []
    for v in figure.interior_vertices():
        pairs = rim_angles(figure, angles, v)
        enter = sorted(a for a, _ in pairs)
        exit_ = sorted(b for _, b in pairs)
        worst = max(abs(a - b) for a, b in zip(enter, exit_))
        if worst > tol:
            violations.append(ConditionViolation(
                v, worst, "rim angle multisets differ"))
    return ConditionReport(PAIRING, not violations, tuple(violations))


def realizability_verdict(figure: Figure, angles: AngleAssignment,
                          tol: Tolerances = Tolerances()) -> Verdict:
    """Run all four checks; realizability follows from the first three.

    A passing pairing check is the stronger certificate and is reported as
    the route; otherwise the verdict rests on the three-condition theorem.
    """
    reports = {
        PI_SUM: check_pi(figure, angles, tol.pi_sum),
        TWO_PI: check_two_pi(figure, angles, tol.two_pi),
        SINE_ROTATION: check_sine_rotation(figure, angles, tol.sine_log),
        PAIRING: check_pairing(figure, angles, tol.pairing),
    }
    realizable = all(reports[c].passed for c in (PI_SUM, TWO_PI, SINE_ROTATION))
    via = "pairing_corollary" if (realizable and reports[PAIRING].passed) \
        else "realizability_theorem"
    return Verdict(realizable, via, reports)
