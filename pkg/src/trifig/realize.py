"""Coordinate construction for realizable angle assignments.

Given a figure and an assignment that passes the realizability checks, build
explicit vertex coordinates: seed one triangle on the unit base, complete the
fan of every interior vertex, then attach the remaining (exterior) triangles.
Whenever a triangle comes up with all three corners already placed, closing it
is a *join*: the measured angles must agree with the assigned ones, and the
discrepancy is the closure residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .conditions import AngleAssignment
from .figure import Figure, FigureError

DEGENERATE_GUARD = 1e-9  # degrees from 0 or 180 at which construction refuses


class RealizationError(ValueError):
    """Construction failed: closure residual, concavity, or degeneracy."""


@dataclass(frozen=True)
class ClosureResidual:
    vertex: str
    residual_enter: float  # degrees, at the corner shared with the previous fan triangle
    residual_exit: float   # degrees, at the corner shared with the next one

    @property
    def worst(self) -> float:
        return max(self.residual_enter, self.residual_exit)


@dataclass(frozen=True)
class Realization:
    """Vertex coordinates in canonical pose.

    Canonical pose: the seed triangle's first edge runs from (0,0) to (1,0)
    and its third corner lies in the upper half-plane.  Coordinates are
    dimensionless; a realization stands for its whole similarity class.
    """

    coords: dict
    closure_residuals: tuple[ClosureResidual, ...] = ()
    warnings: tuple[str, ...] = ()

    def point(self, label: str):
        return self.coords[label]

    def diameter(self) -> float:
        pts = list(self.coords.values())
        return max(math.dist(p, q) for p in pts for q in pts)


# -- scalar helpers ----------------------------------------------------------

def _rot(vec, deg):
    r = math.radians(deg)
    c, s = math.cos(r), math.sin(r)
    return (c * vec[0] - s * vec[1], s * vec[0] + c * vec[1])


def _intersect_rays(p, dp, q, dq):
    det = dp[0] * dq[1] - dp[1] * dq[0]
    if abs(det) < 1e-15:
        raise RealizationError("placement rays are parallel")
    t = ((q[0] - p[0]) * dq[1] - (q[1] - p[1]) * dq[0]) / det
    return (p[0] + t * dp[0], p[1] + t * dp[1])


def _angle_at(apex, a, b) -> float:
    """Angle at `apex` between directions toward a and b, degrees in (0,180)."""
    u = (a[0] - apex[0], a[1] - apex[1])
    w = (b[0] - apex[0], b[1] - apex[1])
    cross = u[0] * w[1] - u[1] * w[0]
    dot = u[0] * w[0] + u[1] * w[1]
    return math.degrees(math.atan2(abs(cross), dot))


def _signed_area(p, q, r) -> float:
    return 0.5 * ((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))


# -- construction ------------------------------------------------------------

def _guard_angles(angles: AngleAssignment) -> None:
    for i, row in enumerate(angles.values):
        for j, a in enumerate(row):
            if a < DEGENERATE_GUARD or a > 180.0 - DEGENERATE_GUARD:
                raise RealizationError(
                    f"triangle {i} corner {j}: angle {a} within guard of 0/180")


def _place_third(figure: Figure, angles: AngleAssignment, coords, tri_index: int) -> None:
    """Place the one unplaced corner of a triangle with a placed edge."""
    t = figure.triangles[tri_index]
    k = next(s for s in range(3) if t.corners[s] not in coords)
    x_label = t.corners[k]
    u_label = t.corners[(k + 1) % 3]
    w_label = t.corners[(k + 2) % 3]
    u, w = coords[u_label], coords[w_label]
    # corners are counterclockwise, so x sits left of the directed edge u->w
    du = _rot((w[0] - u[0], w[1] - u[1]), angles.get(tri_index, (k + 1) % 3))
    dw = _rot((u[0] - w[0], u[1] - w[1]), -angles.get(tri_index, (k + 2) % 3))
    coords[x_label] = _intersect_rays(u, du, w, dw)


def _close_triangle(figure: Figure, angles: AngleAssignment, coords,
                    tri_index: int) -> float:
    """All three corners placed: return max |measured - assigned| in degrees."""
    t = figure.triangles[tri_index]
    pts = [coords[c] for c in t.corners]
    worst = 0.0
    for s in range(3):
        measured = _angle_at(pts[s], pts[(s + 1) % 3], pts[(s + 2) % 3])
        worst = max(worst, abs(measured - angles.get(tri_index, s)))
    return worst


def realize(figure: Figure, angles: AngleAssignment, tol: float = 1e-7,
            seed: int = 0, require_convex: bool = True) -> Realization:
    """Construct coordinates for every vertex; canonical pose on return.

    ``seed`` selects the starting triangle (default: lowest index); the
    canonical normalization makes the choice observationally irrelevant.
    A join whose residual exceeds ``tol`` aborts: the input either fails the
    sine-rotation condition or is numerically out of budget.
    """
    _guard_angles(angles)
    if not (0 <= seed < len(figure.triangles)):
        raise RealizationError(f"seed triangle {seed} out of range")

    coords: dict = {}
    t0 = figure.triangles[seed]
    coords[t0.corners[0]] = (0.0, 0.0)
    coords[t0.corners[1]] = (1.0, 0.0)
    _place_third(figure, angles, coords, seed)
    placed = {seed}
    residuals: list[ClosureResidual] = []
    warnings: list[str] = []

    def fan_progress():
        """Interior vertices with a partially placed fan, deterministic order."""
        for v in figure.interior_vertices():
            fan = figure.fans[v]
            done = sum(1 for i in fan.order if i in placed)
            if 0 < done < len(fan.order):
                yield v, fan

    while len(placed) < len(figure.triangles):
        advanced = False
        for v, fan in fan_progress():
            n = len(fan.order)
            # walk forward from each placed fan triangle
            for pos in range(n):
                if fan.order[pos] in placed and fan.order[(pos + 1) % n] not in placed:
                    nxt_pos = (pos + 1) % n
                    i = fan.order[nxt_pos]
                    t = figure.triangles[i]
                    unplaced = [c for c in t.corners if c not in coords]
                    if not unplaced:
                        worst = _close_triangle(figure, angles, coords, i)
                        enter_label, exit_label = fan.rim[nxt_pos]
                        pts = {c: coords[c] for c in t.corners}
                        r = _angle_at(pts[enter_label], pts[v], pts[exit_label])
                        s = _angle_at(pts[exit_label], pts[v], pts[enter_label])
                        residuals.append(ClosureResidual(
                            v,
                            abs(r - angles.get(i, t.slot_of(enter_label))),
                            abs(s - angles.get(i, t.slot_of(exit_label)))))
                        if worst > tol:
                            raise RealizationError(
                                f"closure residual {worst:.3g} deg at vertex {v} "
                                f"(triangle T{i}) exceeds tolerance {tol:.3g}")
                    else:
                        _place_third(figure, angles, coords, i)
                    placed.add(i)
                    advanced = True
                    break
            if advanced:
                break
        if advanced:
            continue
        # exterior stage: any unplaced triangle sharing a placed full edge
        for t in figure.triangles:
            if t.index in placed:
                continue
            missing = [c for c in t.corners if c not in coords]
            if len(missing) <= 1:
                if missing:
                    _place_third(figure, angles, coords, t.index)
                else:
                    worst = _close_triangle(figure, angles, coords, t.index)
                    if worst > tol:
                        raise RealizationError(
                            f"join residual {worst:.3g} deg at triangle T{t.index}")
                placed.add(t.index)
                advanced = True
                break
        if not advanced:
            raise RealizationError("no placeable triangle: figure not edge-connected?")

    diam = max(math.dist(p, q) for p in coords.values() for q in coords.values())
    for t in figure.triangles:
        area = _signed_area(*(coords[c] for c in t.corners))
        if area <= 1e-12 * diam * diam:
            raise RealizationError(
                f"triangle T{t.index} degenerate or misoriented (signed area {area:.3g})")

    realization = _normalize(Realization(coords, tuple(residuals)), figure)
    if not verify_convex(realization, figure):
        if require_convex:
            raise RealizationError("realized perimeter is not convex")
        warnings.append("perimeter not convex")
    overlaps = overlapping_pairs(realization, figure)
    if overlaps:
        warnings.append(
            "overlapping triangles: " + ", ".join(f"T{a}/T{b}" for a, b in overlaps))
    return Realization(realization.coords, tuple(residuals), tuple(warnings))


def _normalize(realization: Realization, figure: Figure) -> Realization:
    """Similarity-transform into canonical pose keyed to triangle 0."""
    t0 = figure.triangles[0]
    a = realization.coords[t0.corners[0]]
    b = realization.coords[t0.corners[1]]
    ex = (b[0] - a[0], b[1] - a[1])
    norm2 = ex[0] ** 2 + ex[1] ** 2
    if norm2 == 0.0:
        raise RealizationError("seed edge has zero length")
    out = {}
    for label, p in realization.coords.items():
        d = (p[0] - a[0], p[1] - a[1])
        out[label] = ((d[0] * ex[0] + d[1] * ex[1]) / norm2,
                      (d[1] * ex[0] - d[0] * ex[1]) / norm2)
    c = out[t0.corners[2]]
    if c[1] < 0:  # mirror so the seed triangle's third corner is above the base
        out = {label: (p[0], -p[1]) for label, p in out.items()}
    return Realization(out, realization.closure_residuals, realization.warnings)


def closure_residual(figure: Figure, angles: AngleAssignment, vertex: str) -> ClosureResidual:
    """Realize the fan at an interior vertex and measure the final join.

    The fan is laid out around the vertex by the sine rule; the last triangle
    is closed by joining the two already-placed rim points, and the angles
    that segment actually makes are compared with the assigned values.
    """
    fan = figure.fan(vertex)
    if not fan.closed:
        raise FigureError(f"vertex {vertex!r} is not interior")
    _guard_angles(angles)

    center = (0.0, 0.0)
    rim_pts = {fan.rim[0][0]: (1.0, 0.0)}
    heading = 0.0
    radius = 1.0
    for pos, i in enumerate(fan.order[:-1]):
        t = figure.triangles[i]
        enter_label, exit_label = fan.rim[pos]
        central = angles.get(i, t.slot_of(vertex))
        enter = angles.get(i, t.slot_of(enter_label))
        exit_ = angles.get(i, t.slot_of(exit_label))
        heading += central
        radius *= math.sin(math.radians(enter)) / math.sin(math.radians(exit_))
        rim_pts[exit_label] = (radius * math.cos(math.radians(heading)),
                               radius * math.sin(math.radians(heading)))

    last = fan.order[-1]
    t = figure.triangles[last]
    enter_label, exit_label = fan.rim[-1]
    p, q = rim_pts[enter_label], rim_pts[exit_label]
    r = _angle_at(p, center, q)
    s = _angle_at(q, center, p)
    return ClosureResidual(
        vertex,
        abs(r - angles.get(last, t.slot_of(enter_label))),
        abs(s - angles.get(last, t.slot_of(exit_label))))


# -- measurement and checks ---------------------------------------------------

def measure_angles(realization: Realization, figure: Figure) -> AngleAssignment:
    """Read the per-corner angles off the coordinates, in degrees."""
    rows = []
    for t in figure.triangles:
        pts = [realization.coords[c] for c in t.corners]
        if abs(_signed_area(*pts)) < 1e-15:
            raise RealizationError(f"triangle T{t.index} is degenerate")
        rows.append(tuple(_angle_at(pts[s], pts[(s + 1) % 3], pts[(s + 2) % 3])
                          for s in range(3)))
    return AngleAssignment(tuple(rows))


def boundary_polygon(realization: Realization, figure: Figure) -> list:
    """Perimeter vertex labels as one closed cycle (orientation as stored)."""
    edges = figure.boundary_edges()
    if not edges:
        raise FigureError("figure has no boundary edges")
    link: dict[str, list[str]] = {}
    for e in edges:
        a, b = sorted(e)
        link.setdefault(a, []).append(b)
        link.setdefault(b, []).append(a)
    if any(len(nbrs) != 2 for nbrs in link.values()):
        raise FigureError("boundary is not a single closed cycle")
    start = min(link)
    cycle = [start, link[start][0]]
    while True:
        prev, cur = cycle[-2], cycle[-1]
        nxt = link[cur][0] if link[cur][0] != prev else link[cur][1]
        if nxt == start:
            break
        cycle.append(nxt)
        if len(cycle) > len(link):
            raise FigureError("boundary is not a single closed cycle")
    if len(cycle) != len(link):
        raise FigureError("boundary is not a single closed cycle")
    return cycle


def verify_convex(realization: Realization, figure: Figure, tol: float = 1e-9) -> bool:
    """True iff the perimeter polygon turns in a single direction.

    Straight vertices (cross within ``tol`` of zero on unit vectors) are
    accepted; they arise when a perimeter vertex carries exactly 180 degrees.
    """
    cycle = boundary_polygon(realization, figure)
    n = len(cycle)
    sign = 0
    for i in range(n):
        p = realization.coords[cycle[i]]
        q = realization.coords[cycle[(i + 1) % n]]
        r = realization.coords[cycle[(i + 2) % n]]
        u = (q[0] - p[0], q[1] - p[1])
        w = (r[0] - q[0], r[1] - q[1])
        nu, nw = math.hypot(*u), math.hypot(*w)
        if nu == 0 or nw == 0:
            return False
        cross = (u[0] * w[1] - u[1] * w[0]) / (nu * nw)
        if abs(cross) <= tol:
            continue
        s = 1 if cross > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def polygon_area(points) -> float:
    s = 0.0
    n = len(points)
    for i in range(n):
        x0, y0 = points[i]
        x1, y1 = points[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return abs(s) / 2.0


def overlapping_pairs(realization: Realization, figure: Figure,
                      rel_tol: float = 1e-9):
    """Triangle pairs with positive-area intersection beyond shared edges."""
    from shapely.geometry import Polygon

    polys = [Polygon([realization.coords[c] for c in t.corners])
             for t in figure.triangles]
    total = sum(p.area for p in polys)
    bad = []
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            inter = polys[i].intersection(polys[j]).area
            if inter > rel_tol * total:
                bad.append((i, j))
    return bad
