"""Randomized verification campaigns over the scenario catalog.

A campaign re-derives a scenario many times at random parameters, checks the
scenario's own geometric claims, runs the realizability conditions on its
angle map, reconstructs coordinates with the realizer, and compares them to
the oracle up to similarity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..conditions import AngleAssignment, Tolerances, realizability_verdict
from ..figure import Figure, FigureError
from ..realize import RealizationError, realize
from ._geom import OracleError, dist, similarity_align
from .scenarios import BUILDERS, SCENARIO_NAMES, Scenario

__all__ = [
    "SCENARIO_NAMES", "TrialRecord", "VerificationReport", "draw_params",
    "run_verification", "compare_to_oracle", "random_convex_polygon",
    "random_pairing_fan", "random_wheel", "perturb_interior_angle",
]


def compare_to_oracle(scenario: Scenario, tol: float = 1e-7) -> float:
    """Reconstruct coordinates from the angle map alone and return the worst
    vertex distance to the similarity-aligned oracle, relative to diameter."""
    real = realize(scenario.figure, scenario.angles, tol=tol)
    anchor = scenario.figure.triangles[0].corners[:2]
    aligned = similarity_align(scenario.oracle, real.coords, keys=anchor)
    diam = real.diameter()
    return max(dist(aligned[k], real.coords[k]) for k in real.coords) / diam


# -- parameter draws -----------------------------------------------------------

def _split(rng, total, parts, lo, hi, tries=200):
    """``parts`` values in (lo, hi) summing to ``total``."""
    if not (parts * lo < total < parts * hi):
        raise OracleError("infeasible split")
    if total > parts * (lo + hi) / 2.0:
        # mirror: rejection sampling is well conditioned below the midpoint
        mirrored = _split(rng, parts * (lo + hi) - total, parts, lo, hi, tries)
        return tuple(lo + hi - v for v in mirrored)
    for _ in range(tries):
        w = rng.dirichlet(np.ones(parts))
        vals = lo + w * (total - parts * lo)
        if vals.max() < hi:
            return tuple(float(v) for v in vals)
    raise OracleError("could not split total within bounds")


def draw_params(name: str, rng, stress: bool = False) -> tuple:
    """Random valid parameters for a named scenario.

    Regular draws keep a comfortable margin from degeneracies; ``stress``
    shrinks it to probe near-degenerate configurations.
    """
    m = 0.5 if stress else 5.0
    if name in ("morley_classic", "incenter_equilateral", "morley_partial"):
        return _split(rng, 180.0, 3, m, 180.0 - 2 * m)
    if name == "morley_hexagon":
        total = rng.uniform(180.0 + 3 * m, 3 * (180.0 - m) - 3 * m)
        return _split(rng, total, 3, m, 180.0 - m)
    if name == "bisector_hexagon":
        delta = rng.uniform(60.0 + m, 180.0 - m)
        return _split(rng, 720.0 - 3 * delta, 3, m, 180.0 - m) + (delta,)
    if name == "semi_median":
        abc = _split(rng, 180.0, 3, 2 * m, 180.0 - 4 * m)
        lo = 0.05 if stress else 0.5
        delta = rng.uniform(lo, 0.9 * min(abc) / 2.0)
        return abc + (delta,)
    if name == "quadriceptor":
        return _split(rng, 45.0, 3, m / 4.0, 45.0 - m / 2.0)
    if name == "circle_chords":
        alpha = rng.uniform(m, 180.0 - 3 * m)
        beta = rng.uniform(alpha + m, 180.0 - m)
        return (alpha, beta)
    raise KeyError(f"unknown scenario {name!r}")


# -- campaign ------------------------------------------------------------------

@dataclass(frozen=True)
class TrialRecord:
    index: int
    params: dict
    claim_dev: float = float("inf")     # worst scenario check
    coordinate_dev: float = float("inf")  # realize vs oracle / diameter
    realizable: bool = False
    via: str = ""
    error: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    scenario: str
    trials: int
    seed: int
    claim_tol: float
    coordinate_tol: float
    records: tuple = ()

    @property
    def failures(self) -> list:
        out = []
        for r in self.records:
            if (r.error is not None or not r.realizable
                    or r.claim_dev > self.claim_tol
                    or r.coordinate_dev > self.coordinate_tol):
                out.append(r)
        return out

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def max_claim_dev(self) -> float:
        return max((r.claim_dev for r in self.records), default=0.0)

    @property
    def max_coordinate_dev(self) -> float:
        return max((r.coordinate_dev for r in self.records), default=0.0)

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.failures)}/{self.trials})"
        return (f"{self.scenario}: {status}  trials={self.trials}"
                f"  claim_dev={self.max_claim_dev:.3e}"
                f"  coord_dev={self.max_coordinate_dev:.3e}")


def run_verification(name: str, trials: int = 100, seed: int = 0,
                     claim_tol: float = 1e-9, coordinate_tol: float = 1e-9,
                     stress: bool = False) -> VerificationReport:
    """Run a seeded campaign for one scenario.

    Each trial draws parameters from its own child generator, so trial i is
    reproducible independently of the others.
    """
    if name not in BUILDERS:
        raise KeyError(f"unknown scenario {name!r}; choose from {SCENARIO_NAMES}")
    builder = BUILDERS[name]
    cond_tol = Tolerances.measured()
    records = []
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        params = draw_params(name, rng, stress=stress)
        keys = list(builder.__code__.co_varnames[:builder.__code__.co_argcount])
        pdict = dict(zip(keys, params))
        try:
            sc = builder(*params)
            verdict = realizability_verdict(sc.figure, sc.angles, cond_tol)
            coord_dev = compare_to_oracle(sc)
            records.append(TrialRecord(i, pdict, sc.worst_check(), coord_dev,
                                       verdict.realizable, verdict.via))
        except (OracleError, RealizationError, FigureError, ValueError) as exc:
            records.append(TrialRecord(i, pdict, error=f"{type(exc).__name__}: {exc}"))
    return VerificationReport(name, trials, seed, claim_tol, coordinate_tol,
                              tuple(records))


# -- random figure generators ---------------------------------------------------

def random_convex_polygon(rng, n_vertices: int, min_gap_deg: float = 10.0):
    """Vertices of a random convex polygon (points on the unit circle at
    sorted angular positions with a minimum gap), counterclockwise."""
    if n_vertices * min_gap_deg >= 360.0:
        raise OracleError("too many vertices for the angular gap")
    gaps = min_gap_deg + rng.dirichlet(np.ones(n_vertices)) \
        * (360.0 - n_vertices * min_gap_deg)
    angles = rng.uniform(0.0, 360.0) + np.cumsum(gaps)
    rad = np.radians(angles)
    return [(float(np.cos(a)), float(np.sin(a))) for a in rad]


def random_polygon_figure(rng, n_vertices: int, name: str = "polygon"):
    """Random convex polygon with a random-apex fan triangulation; returns
    the figure, measured angle map, and coordinates."""
    pts = random_convex_polygon(rng, n_vertices)
    labels = [f"V{k}" for k in range(n_vertices)]
    coords = dict(zip(labels, pts))
    apex = int(rng.integers(0, n_vertices))
    order = labels[apex:] + labels[:apex]
    triangles = [(order[0], order[k], order[k + 1]) for k in range(1, n_vertices - 1)]
    figure = Figure(triangles, name=name)
    rows = []
    for t in figure.triangles:
        p = [coords[c] for c in t.corners]
        rows.append(tuple(_measure_corner(p, s) for s in range(3)))
    return figure, AngleAssignment(tuple(rows)), coords


def _measure_corner(pts, s):
    import math
    a, b, c = pts[s], pts[(s + 1) % 3], pts[(s + 2) % 3]
    u = (b[0] - a[0], b[1] - a[1])
    v = (c[0] - a[0], c[1] - a[1])
    return math.degrees(math.atan2(abs(u[0] * v[1] - u[1] * v[0]),
                                   u[0] * v[0] + u[1] * v[1]))


def random_wheel(rng, n_triangles: int, name: str = "wheel"):
    """Random closed fan built from coordinates: a convex polygon joined to
    an interior hub.  Returns figure, measured angles, coords."""
    pts = random_convex_polygon(rng, n_triangles)
    hub = (float(np.mean([p[0] for p in pts])), float(np.mean([p[1] for p in pts])))
    labels = [f"R{k}" for k in range(n_triangles)]
    coords = dict(zip(labels, pts))
    coords["O"] = hub
    triangles = [(labels[k], labels[(k + 1) % n_triangles], "O")
                 for k in range(n_triangles)]
    figure = Figure(triangles, name=name)
    rows = []
    for t in figure.triangles:
        p = [coords[c] for c in t.corners]
        rows.append(tuple(_measure_corner(p, s) for s in range(3)))
    return figure, AngleAssignment(tuple(rows)), coords


def random_pairing_fan(rng, n_triangles: int, jitter: float = 0.15,
                       name: str = "fan"):
    """Synthetic closed fan whose rim multisets match by construction.

    Rim values are a jittered resampling of the realizable mean; the exit
    side is a random permutation of the enter side, which forces hub angles
    to sum to 360 while keeping all angles valid.  Purely combinatorial: no
    coordinates exist a priori.
    """
    n = n_triangles
    mean = 90.0 * (n - 2) / n
    for _ in range(200):
        enters = mean * (1.0 + rng.uniform(-jitter, jitter, n))
        enters *= (90.0 * (n - 2)) / enters.sum()
        perm = rng.permutation(n)
        exits = enters[perm]
        hubs = 180.0 - enters - exits
        rims = exits[np.arange(n) - 1] + enters  # vertex k: exit of k-1, enter of k
        if hubs.min() > 1.0 and enters.min() > 1.0 and rims.max() < 179.0:
            break
    else:
        raise OracleError("could not draw a pairing fan")
    labels = [f"R{k}" for k in range(n)]
    triangles = [(labels[k], labels[(k + 1) % n], "O") for k in range(n)]
    figure = Figure(triangles, name=name)
    rows = []
    for k, t in enumerate(figure.triangles):
        by_label = {labels[k]: float(enters[k]),
                    labels[(k + 1) % n]: float(exits[k]),
                    "O": float(hubs[k])}
        rows.append(tuple(by_label[c] for c in t.corners))
    return figure, AngleAssignment(tuple(rows))


def perturb_interior_angle(figure: Figure, angles: AngleAssignment, rng,
                           magnitude: float = 1e-3):
    """Nudge one angle at an interior vertex by ±magnitude, absorbing the
    change inside the same triangle so the 180-sum stays exact.

    Returns (new_angles, description).  Both compensating corners sit at
    other vertices, so the triangle's own sum cannot mask the change.
    """
    interior = sorted(figure.interior_vertices())
    if not interior:
        raise ValueError("figure has no interior vertex to perturb")
    v = interior[int(rng.integers(0, len(interior)))]
    hits = [(t.index, t.slot_of(v)) for t in figure.triangles if v in t.corners]
    tri, slot = hits[int(rng.integers(0, len(hits)))]
    sign = 1.0 if rng.random() < 0.5 else -1.0
    row = list(angles.values[tri])
    row[slot] += sign * magnitude
    row[(slot + 1) % 3] -= sign * magnitude / 2.0
    row[(slot + 2) % 3] -= sign * magnitude / 2.0
    new_rows = list(angles.values)
    new_rows[tri] = tuple(row)
    desc = (f"triangle {tri}, corner {figure.triangles[tri].corners[slot]}: "
            f"{sign * magnitude:+g} deg, compensated within the triangle")
    return AngleAssignment(tuple(new_rows)), desc
