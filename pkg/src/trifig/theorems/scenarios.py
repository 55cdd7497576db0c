"""Named geometric configurations with independent coordinate oracles.

Each builder constructs a scenario three ways at once: a combinatorial figure,
an angle assignment for it, and oracle coordinates produced purely by
ray/line/circle intersections.  The ``checks`` mapping holds the scenario's
own claims as named deviations (dimensionless or in degrees, see each
builder); drivers compare them against tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..conditions import AngleAssignment
from ..figure import Figure
from ._geom import (
    OracleError,
    add,
    angle_at,
    cross,
    diameter,
    dist,
    heading,
    intersect_lines,
    intersect_rays,
    point_line_distance,
    rotate,
    signed_angle,
    sub,
    triangle_from_angles,
    unit,
)

SCENARIO_NAMES = (
    "morley_classic",
    "morley_hexagon",
    "bisector_hexagon",
    "semi_median",
    "incenter_equilateral",
    "quadriceptor",
    "circle_chords",
    "morley_partial",
)


@dataclass(frozen=True)
class Scenario:
    name: str
    params: dict
    figure: Figure
    angles: AngleAssignment
    oracle: dict                    # vertex label -> (x, y)
    checks: dict                    # claim name -> deviation
    notes: tuple[str, ...] = ()

    def worst_check(self) -> float:
        return max(self.checks.values()) if self.checks else 0.0


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise OracleError(msg)


def _signed_area(p, q, r) -> float:
    return 0.5 * cross(sub(q, p), sub(r, p))


def _oriented(corners, coords):
    """Cyclic corner order flipped, if needed, to counterclockwise."""
    pts = [coords[c] for c in corners]
    if _signed_area(*pts) < 0:
        return (corners[0], corners[2], corners[1])
    return tuple(corners)


def _figure_from_coords(name, coords, triangles):
    """Build an oriented Figure plus the angle map measured off the oracle."""
    tris = [_oriented(t, coords) for t in triangles]
    figure = Figure(tris, name=name)
    rows = []
    for t in figure.triangles:
        pts = [coords[c] for c in t.corners]
        rows.append(tuple(angle_at(pts[s], pts[(s + 1) % 3], pts[(s + 2) % 3])
                          for s in range(3)))
    return figure, AngleAssignment(tuple(rows))


def _assigned_figure(name, coords, triangles, corner_values):
    """Oriented Figure with prescribed per-corner angle values.

    ``corner_values`` maps (triangle position, corner label) -> degrees.
    """
    tris = [_oriented(t, coords) for t in triangles]
    figure = Figure(tris, name=name)
    rows = []
    for pos, t in enumerate(figure.triangles):
        rows.append(tuple(corner_values[(pos, c)] for c in t.corners))
    return figure, AngleAssignment(tuple(rows))


def _apex(p, q, ref, angle_p, angle_q, side: int):
    """Apex of a triangle on base p-q with the given base angles.

    ``side`` +1 places the apex on ``ref``'s side of the line p-q, -1 on the
    opposite side.
    """
    s = 1.0 if cross(sub(q, p), sub(ref, p)) > 0 else -1.0
    s *= side
    dp = rotate(sub(q, p), s * angle_p)
    dq = rotate(sub(p, q), -s * angle_q)
    return intersect_rays(p, dp, q, dq)


# -- Morley, classic ----------------------------------------------------------

def _morley_points(A, B, C):
    """Triangle plus adjacent-trisector intersections.

    Returns coords for the corner labels A, B, C and the inner points U
    (near side BC), V (near CA), W (near AB).
    """
    a, b, c = A / 3.0, B / 3.0, C / 3.0
    apex, pb, pc = triangle_from_angles(B, C)
    h_ab = heading(sub(pb, apex))
    h_ac = heading(sub(pc, apex))
    U = intersect_rays(pb, unit(b), pc, unit(180.0 - c))
    V = intersect_rays(pc, unit(180.0 - C + c), apex, unit(h_ac - a))
    W = intersect_rays(pb, unit(B - b), apex, unit(h_ab + a))
    return {"A": apex, "B": pb, "C": pc, "U": U, "V": V, "W": W}


_MORLEY_TRIANGLES = (
    ("B", "C", "U"), ("C", "A", "V"), ("A", "B", "W"),
    ("B", "U", "W"), ("C", "V", "U"), ("A", "W", "V"),
    ("U", "V", "W"),
)


def build_morley_classic(A: float, B: float, C: float) -> Scenario:
    """Adjacent angle trisectors of a triangle meet in an equilateral triangle."""
    _require(min(A, B, C) > 0 and abs(A + B + C - 180.0) <= 1e-9,
             "angles must be positive and sum to 180")
    coords = _morley_points(A, B, C)
    sides = [dist(coords["U"], coords["V"]),
             dist(coords["V"], coords["W"]),
             dist(coords["W"], coords["U"])]
    figure, angles = _figure_from_coords("morley_classic", coords, _MORLEY_TRIANGLES)
    return Scenario(
        "morley_classic", {"A": A, "B": B, "C": C}, figure, angles, coords,
        checks={"inner_equilateral": max(sides) / min(sides) - 1.0})


# -- Morley generalized to semi-regular hexagons ------------------------------

def _hexagon_from_equilateral(A, B, G):
    """The semi-regular hexagon whose adjacent trisectors enclose a unit
    equilateral triangle; built outward from that triangle by ray
    intersections.

    P1 sits between corners A and B (toward D1), P2 between B and G, P3
    between G and A.  Corner triangles carry angles (x/3, y/3 + d, z/3 + d)
    with d = delta/2 - 30; the outer wedge triangles complete each corner.
    """
    delta = (720.0 - A - B - G) / 3.0
    a, b, g = A / 3.0, B / 3.0, G / 3.0
    d = delta / 2.0
    e = d - 30.0
    _require(min(a, b, g) + e > 0, "corner angles too small for this angle sum")
    root3 = math.sqrt(3.0)
    P1, P2, P3 = (0.0, 0.0), (1.0, 0.0), (0.5, root3 / 2.0)
    coords = {"P1": P1, "P2": P2, "P3": P3}
    coords["A"] = _apex(P1, P3, P2, b + e, g + e, side=-1)
    coords["B"] = _apex(P2, P1, P3, g + e, a + e, side=-1)
    coords["G"] = _apex(P3, P2, P1, a + e, b + e, side=-1)
    coords["D1"] = _apex(coords["A"], P1, P3, a, 180.0 - a - d, side=-1)
    coords["D2"] = _apex(coords["B"], P2, P1, b, 180.0 - b - d, side=-1)
    coords["D3"] = _apex(coords["G"], P3, P2, g, 180.0 - g - d, side=-1)
    # the same point must close the other wedge; the agreement is a theorem,
    # not a construction step, so report it as a deviation
    d1_alt = _apex(coords["B"], P1, P2, b, 180.0 - b - d, side=-1)
    d2_alt = _apex(coords["G"], P2, P3, g, 180.0 - g - d, side=-1)
    d3_alt = _apex(coords["A"], P3, P1, a, 180.0 - a - d, side=-1)
    consistency = max(dist(coords["D1"], d1_alt),
                      dist(coords["D2"], d2_alt),
                      dist(coords["D3"], d3_alt))
    return coords, delta, consistency


_HEXAGON_TRIANGLES = (
    ("A", "D1", "P1"), ("D1", "B", "P1"),
    ("B", "D2", "P2"), ("D2", "G", "P2"),
    ("G", "D3", "P3"), ("D3", "A", "P3"),
    ("A", "P1", "P3"), ("B", "P2", "P1"), ("G", "P3", "P2"),
    ("P1", "P2", "P3"),
)


def build_morley_hexagon(A: float, B: float, G: float) -> Scenario:
    """Trisectors in a semi-regular hexagon meet in an equilateral triangle
    whose vertices lie on the bisectors of the equal-angle corners.

    The hexagon's free side lengths are fixed by the construction convention:
    the member of the family enclosing a unit equilateral trisector triangle.
    The equilateral/bisector claims are then re-derived forward, from the
    hexagon's own edges, so the construction does not certify itself.
    """
    _require(0 < A < 180 and 0 < B < 180 and 0 < G < 180, "angles must lie in (0,180)")
    _require(A + B + G >= 180.0, "angle sum must be at least 180")
    coords, delta, consistency = _hexagon_from_equilateral(A, B, G)
    hexagon = ["A", "D1", "B", "D2", "G", "D3"]
    pts = [coords[k] for k in hexagon]
    diam = diameter(pts)

    # forward re-derivation: measure corner wedges off the hexagon edges only
    def corner_rays(idx, fraction_first, fraction_second):
        v = pts[idx]
        nxt, prv = pts[(idx + 1) % 6], pts[(idx - 1) % 6]
        full = angle_at(v, nxt, prv)
        s = 1.0 if cross(sub(nxt, v), sub(prv, v)) > 0 else -1.0
        d1 = rotate(sub(nxt, v), s * full * fraction_first)
        d2 = rotate(sub(prv, v), -s * full * fraction_second)
        return v, d1, d2, full

    qa, ra1, ra2, mA = corner_rays(0, 1 / 3, 1 / 3)
    qb, rb1, rb2, mB = corner_rays(2, 1 / 3, 1 / 3)
    qg, rg1, rg2, mG = corner_rays(4, 1 / 3, 1 / 3)
    Q1 = intersect_rays(qa, ra1, qb, rb2)
    Q2 = intersect_rays(qb, rb1, qg, rg2)
    Q3 = intersect_rays(qg, rg1, qa, ra2)
    sides = [dist(Q1, Q2), dist(Q2, Q3), dist(Q3, Q1)]

    bis_dev = 0.0
    for Q, didx in ((Q1, 1), (Q2, 3), (Q3, 5)):
        v, b1, _, _ = corner_rays(didx, 1 / 2, 1 / 2)
        bis_dev = max(bis_dev, point_line_distance(Q, v, b1) / diam)

    figure, angles = _figure_from_coords("morley_hexagon", coords, _HEXAGON_TRIANGLES)
    return Scenario(
        "morley_hexagon", {"A": A, "B": B, "G": G, "delta": delta},
        figure, angles, coords,
        checks={
            "inner_equilateral": max(sides) / min(sides) - 1.0,
            "bisector_incidence": bis_dev,
            "hexagon_consistency": consistency / diam,
            "corner_angle_match": max(abs(mA - A), abs(mB - B), abs(mG - G)),
        },
        notes=("side-length convention: unit inner equilateral",))


# -- bisector concurrency in a semi-regular hexagon ---------------------------

_BISECTOR_HEX_VERTICES = ("A", "D1", "B", "D2", "G", "D3")


def build_bisector_hexagon(alpha: float, beta: float, gamma: float,
                           delta: float) -> Scenario:
    """All six angle bisectors of the canonical semi-regular hexagon concur.

    The assignment is the half-angle map: the hexagon is fanned from the
    concurrency point I, each fan triangle carrying the two half-angles of its
    hexagon edge and 180 minus their sum at I.  The oracle builds the hexagon
    outward from I by ray intersections and then re-measures bisectors from
    the edges alone.
    """
    _require(abs(alpha + beta + gamma + 3 * delta - 720.0) <= 1e-9,
             "hexagon angles must satisfy alpha+beta+gamma+3*delta = 720")
    interior = [alpha, delta, beta, delta, gamma, delta]
    _require(all(0 < x < 180 for x in interior), "hexagon angles must lie in (0,180)")
    halves = [x / 2.0 for x in interior]
    center_angles = [180.0 - halves[k] - halves[(k + 1) % 6] for k in range(6)]
    _require(all(x > 0 for x in center_angles), "fan angle collapsed")

    I = (0.0, 0.0)
    coords = {"I": I, "A": (1.0, 0.0)}
    h = 0.0
    for k in range(5):
        h += center_angles[k]
        v = coords[_BISECTOR_HEX_VERTICES[k]]
        out = rotate(sub(I, v), -halves[k])
        coords[_BISECTOR_HEX_VERTICES[k + 1]] = intersect_rays(I, unit(h), v, out)

    pts = [coords[k] for k in _BISECTOR_HEX_VERTICES]
    diam = diameter(pts)
    # forward check: bisectors measured from the hexagon edges, no use of I
    bis = []
    for k in range(6):
        v = pts[k]
        nxt, prv = pts[(k + 1) % 6], pts[(k - 1) % 6]
        full = angle_at(v, nxt, prv)
        s = 1.0 if cross(sub(nxt, v), sub(prv, v)) > 0 else -1.0
        bis.append((v, rotate(sub(nxt, v), s * full / 2.0)))
    J = intersect_lines(*bis[0], *bis[2])
    concur = max(point_line_distance(J, *bis[k]) for k in range(6)) / diam
    measured = [angle_at(pts[k], pts[(k + 1) % 6], pts[(k - 1) % 6]) for k in range(6)]
    angle_match = max(abs(m - x) for m, x in zip(measured, interior))

    triangles = [(_BISECTOR_HEX_VERTICES[k], _BISECTOR_HEX_VERTICES[(k + 1) % 6], "I")
                 for k in range(6)]
    values = {}
    for k in range(6):
        values[(k, _BISECTOR_HEX_VERTICES[k])] = halves[k]
        values[(k, _BISECTOR_HEX_VERTICES[(k + 1) % 6])] = halves[(k + 1) % 6]
        values[(k, "I")] = center_angles[k]
    figure, angles = _assigned_figure("bisector_hexagon", coords, triangles, values)
    return Scenario(
        "bisector_hexagon",
        {"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta},
        figure, angles, coords,
        checks={"bisector_concurrency": concur, "corner_angle_match": angle_match})


# -- semi-medians --------------------------------------------------------------

def _semi_median_base_point(p, q, ref, delta):
    """Point seeing base p-q under angle delta from both ends, on ref's side."""
    return _apex(p, q, ref, delta, delta, side=1)


def build_semi_median(alpha: float, beta: float, gamma: float,
                      delta: float) -> Scenario:
    """The three semi-medians of a triangle are concurrent.

    A semi-median from B targets the interior point that sees side AC under
    the offset angle delta from both A and C; it reduces to the median as
    delta tends to zero.
    """
    _require(abs(alpha + beta + gamma - 180.0) <= 1e-9, "angles must sum to 180")
    _require(0 < delta < min(alpha, beta, gamma) / 2.0,
             "delta must lie in (0, min(angle)/2)")
    Apt, Bpt, Cpt = triangle_from_angles(beta, gamma)
    coords = {"A": Apt, "B": Bpt, "C": Cpt}
    B0 = _semi_median_base_point(Apt, Cpt, Bpt, delta)
    A0 = _semi_median_base_point(Bpt, Cpt, Apt, delta)
    C0 = _semi_median_base_point(Apt, Bpt, Cpt, delta)
    coords["B0"] = B0
    diam = diameter([Apt, Bpt, Cpt])

    M = intersect_lines(Bpt, sub(B0, Bpt), Apt, sub(A0, Apt))
    concur = point_line_distance(M, Cpt, sub(C0, Cpt)) / diam

    # split angles, each subscript-1 part adjacent to the cyclically previous
    # vertex (alpha1 toward C, beta1 toward A, gamma1 toward B)
    alpha1, alpha2 = angle_at(Apt, Cpt, A0), angle_at(Apt, A0, Bpt)
    beta1, beta2 = angle_at(Bpt, Apt, B0), angle_at(Bpt, B0, Cpt)
    gamma1, gamma2 = angle_at(Cpt, Bpt, C0), angle_at(Cpt, C0, Apt)
    lhs = sum(math.log(math.sin(math.radians(x))) for x in (alpha1, beta1, gamma1))
    rhs = sum(math.log(math.sin(math.radians(x))) for x in (alpha2, beta2, gamma2))

    # closed-form split at B: sin(b1) = k sin(beta - b1), k = sin(a-d)/sin(g-d)
    k = math.sin(math.radians(alpha - delta)) / math.sin(math.radians(gamma - delta))
    rb = math.radians(beta)
    beta1_pred = math.degrees(math.atan2(k * math.sin(rb), 1.0 + k * math.cos(rb)))

    figure, angles = _figure_from_coords(
        "semi_median", coords,
        (("A", "B", "B0"), ("B", "C", "B0"), ("C", "A", "B0")))
    return Scenario(
        "semi_median",
        {"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta},
        figure, angles, coords,
        checks={
            "concurrency": concur,
            "sine_identity_log": abs(lhs - rhs),
            "split_angle_formula": abs(beta1 - beta1_pred),
        })


def semi_median_foot(alpha: float, beta: float, gamma: float, delta: float):
    """Where the semi-median from B, extended, crosses side AC; plus the
    midpoint of AC (for the median limit)."""
    Apt, Bpt, Cpt = triangle_from_angles(beta, gamma)
    B0 = _semi_median_base_point(Apt, Cpt, Bpt, delta)
    foot = intersect_lines(Bpt, sub(B0, Bpt), Apt, sub(Cpt, Apt))
    mid = ((Apt[0] + Cpt[0]) / 2.0, (Apt[1] + Cpt[1]) / 2.0)
    return foot, mid, diameter([Apt, Bpt, Cpt])


# -- incenter equilateral (two rays at half-angle plus 60) ---------------------

def build_incenter_equilateral(A: float, B: float, C: float) -> Scenario:
    """Rays from the incenter at B/2+60 off IA and A/2+60 off IB cut the far
    sides in points forming an equilateral triangle with the incenter."""
    _require(min(A, B, C) > 0 and abs(A + B + C - 180.0) <= 1e-9,
             "angles must be positive and sum to 180")
    Apt, Bpt, Cpt = triangle_from_angles(B, C)
    I = intersect_rays(Bpt, unit(B / 2.0), Cpt, unit(180.0 - C / 2.0))
    coords = {"A": Apt, "B": Bpt, "C": Cpt, "I": I}

    sA = 1.0 if signed_angle(sub(Apt, I), sub(Cpt, I)) > 0 else -1.0
    P = intersect_lines(I, rotate(sub(Apt, I), sA * (B / 2.0 + 60.0)),
                        Apt, sub(Cpt, Apt))
    sB = 1.0 if signed_angle(sub(Bpt, I), sub(Cpt, I)) > 0 else -1.0
    Q = intersect_lines(I, rotate(sub(Bpt, I), sB * (A / 2.0 + 60.0)),
                        Bpt, sub(Cpt, Bpt))

    def _on_segment(p, a, b):
        t = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
        t /= dist(a, b) ** 2
        return 0.0 < t < 1.0

    _require(_on_segment(P, Apt, Cpt), "P falls outside side AC")
    _require(_on_segment(Q, Bpt, Cpt), "Q falls outside side BC")
    coords["P"], coords["Q"] = P, Q

    ip, pq, qi = dist(I, P), dist(P, Q), dist(Q, I)
    figure, angles = _figure_from_coords(
        "incenter_equilateral", coords,
        (("A", "B", "I"), ("B", "Q", "I"), ("Q", "P", "I"),
         ("P", "A", "I"), ("Q", "C", "P")))
    return Scenario(
        "incenter_equilateral", {"A": A, "B": B, "C": C},
        figure, angles, coords,
        checks={"ip_over_pq": abs(ip / pq - 1.0), "qi_over_pq": abs(qi / pq - 1.0)})


# -- quadrisectors --------------------------------------------------------------

def build_quadriceptor(alpha: float, beta: float, gamma: float) -> Scenario:
    """Complete angle solution of the quadrisected triangle.

    A triangle with angles 4a, 4b, 4c (a+b+c = 45) has its middle
    quadrisectors concurrent at the incenter I, and the side-adjacent
    quadrisectors of each pair of corners meeting at a point that sees the
    two corners and I under angles offset by multiples of 45.  The assignment
    is that analytic map; the oracle intersects the quadrisector rays
    directly and measures.
    """
    _require(min(alpha, beta, gamma) > 0 and abs(alpha + beta + gamma - 45.0) <= 1e-9,
             "quarter-angles must be positive and sum to 45")
    a, b, g = alpha, beta, gamma
    Apt, Bpt, Cpt = triangle_from_angles(4 * b, 4 * g)
    h_ab = heading(sub(Bpt, Apt))
    h_ac = heading(sub(Cpt, Apt))

    def rayB(k):
        return unit(k * b)

    def rayC(k):
        return unit(180.0 - k * g)

    def rayA(k):
        return unit(h_ab + k * a)

    I = intersect_rays(Bpt, rayB(2), Cpt, rayC(2))
    U = intersect_rays(Bpt, rayB(1), Cpt, rayC(1))
    V = intersect_rays(Cpt, rayC(3), Apt, rayA(3))
    W = intersect_rays(Bpt, rayB(3), Apt, rayA(1))
    coords = {"A": Apt, "B": Bpt, "C": Cpt, "I": I, "U": U, "V": V, "W": W}
    diam = diameter([Apt, Bpt, Cpt])
    incenter_dev = point_line_distance(I, Apt, rayA(2)) / diam

    st = lambda x, k: x + 45.0 * k
    triangles = (
        ("B", "C", "U"), ("B", "U", "I"), ("C", "I", "U"),
        ("C", "A", "V"), ("C", "V", "I"), ("A", "I", "V"),
        ("A", "B", "W"), ("A", "W", "I"), ("B", "I", "W"),
    )
    corner_map = {
        0: {"B": b, "C": g, "U": st(a, 3)},
        1: {"B": b, "U": st(g, 2), "I": st(a, 1)},
        2: {"C": g, "I": st(a, 1), "U": st(b, 2)},
        3: {"C": g, "A": a, "V": st(b, 3)},
        4: {"C": g, "V": st(a, 2), "I": st(b, 1)},
        5: {"A": a, "I": st(b, 1), "V": st(g, 2)},
        6: {"A": a, "B": b, "W": st(g, 3)},
        7: {"A": a, "W": st(b, 2), "I": st(g, 1)},
        8: {"B": b, "I": st(g, 1), "W": st(a, 2)},
    }
    values = {(pos, lab): val for pos, m in corner_map.items() for lab, val in m.items()}
    figure, angles = _assigned_figure("quadriceptor", coords, triangles, values)

    _, meas_angles = _figure_from_coords("quadriceptor", coords, triangles)
    map_dev = max(abs(x - y)
                  for row_a, row_m in zip(angles.values, meas_angles.values)
                  for x, y in zip(row_a, row_m))
    return Scenario(
        "quadriceptor", {"alpha": alpha, "beta": beta, "gamma": gamma},
        figure, angles, coords,
        checks={"starred_map": map_dev, "middle_rays_concurrent": incenter_dev})


# -- chords of a circle ---------------------------------------------------------

def build_circle_chords(alpha: float, beta: float, offset: float = 0.0) -> Scenario:
    """Two secants through circle points: the angle at their crossing is half
    the difference of the subtended arcs.

    E, F span an arc alpha near the crossing point and C, D an arc beta on the
    opposite side of the circle, so the four points sit in cyclic order
    C, E, F, D; lines EC and FD meet at P outside the circle and the angle
    CPF equals (beta - alpha)/2.
    """
    _require(0 < alpha < beta < 180, "need 0 < alpha < beta < 180")
    at = lambda deg: unit(90.0 + offset + deg)
    Ipt = (0.0, 0.0)
    C = at(180.0 - beta / 2.0)
    D = at(beta / 2.0 - 180.0)
    E = at(alpha / 2.0)
    F = at(-alpha / 2.0)
    P = intersect_lines(E, sub(C, E), F, sub(D, F))
    coords = {"I": Ipt, "C": C, "D": D, "E": E, "F": F, "P": P}
    cpf = angle_at(P, C, F)
    figure, angles = _figure_from_coords(
        "circle_chords", coords,
        (("E", "P", "F"), ("I", "E", "F"), ("I", "C", "E"),
         ("I", "F", "D"), ("I", "D", "C")))
    return Scenario(
        "circle_chords", {"alpha": alpha, "beta": beta},
        figure, angles, coords,
        checks={"crossing_angle": abs(cpf - (beta - alpha) / 2.0)})


# -- Morley point from four trisectors ------------------------------------------

def build_morley_partial(A: float, B: float, C: float) -> Scenario:
    """A point built from four trisectors plus an equilateral closure lies on
    the remaining two trisectors."""
    _require(min(A, B, C) > 0 and abs(A + B + C - 180.0) <= 1e-9,
             "angles must be positive and sum to 180")
    a, b, c = A / 3.0, B / 3.0, C / 3.0
    apex, pb, pc = triangle_from_angles(B, C)
    h_ab = heading(sub(pb, apex))
    h_ac = heading(sub(pc, apex))
    U = intersect_rays(pb, unit(b), pc, unit(180.0 - c))
    W = intersect_rays(pb, unit(B - b), apex, unit(h_ab + a))
    # equilateral closure: the rotation of U about W that keeps (U, V, W)
    # counterclockwise
    V = add(W, rotate(sub(U, W), 60.0))
    if _signed_area(U, V, W) < 0:
        V = add(W, rotate(sub(U, W), -60.0))
    coords = {"A": apex, "B": pb, "C": pc, "U": U, "V": V, "W": W}
    diam = diameter([apex, pb, pc])
    dev_a = point_line_distance(V, apex, unit(h_ac - a)) / diam
    dev_c = point_line_distance(V, pc, unit(180.0 - C + c)) / diam

    figure, angles = _figure_from_coords("morley_partial", coords, _MORLEY_TRIANGLES)
    return Scenario(
        "morley_partial", {"A": A, "B": B, "C": C}, figure, angles, coords,
        checks={"remaining_trisector_a": dev_a, "remaining_trisector_c": dev_c})


BUILDERS = {
    "morley_classic": build_morley_classic,
    "morley_hexagon": build_morley_hexagon,
    "bisector_hexagon": build_bisector_hexagon,
    "semi_median": build_semi_median,
    "incenter_equilateral": build_incenter_equilateral,
    "quadriceptor": build_quadriceptor,
    "circle_chords": build_circle_chords,
    "morley_partial": build_morley_partial,
}
