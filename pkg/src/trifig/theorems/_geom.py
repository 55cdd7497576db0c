"""Direct coordinate constructions used by the theorem oracles.

Deliberately self-contained: ray/line intersection, circle points and angle
measurement only, sharing no construction path with the realizer.
"""

from __future__ import annotations

import math


class OracleError(ValueError):
    """Oracle construction failed (parallel rays, out-of-range parameters)."""


def unit(deg: float):
    r = math.radians(deg)
    return (math.cos(r), math.sin(r))


def rotate(vec, deg: float):
    r = math.radians(deg)
    c, s = math.cos(r), math.sin(r)
    return (c * vec[0] - s * vec[1], s * vec[0] + c * vec[1])


def heading(vec) -> float:
    return math.degrees(math.atan2(vec[1], vec[0]))


def add(p, v, scale: float = 1.0):
    return (p[0] + scale * v[0], p[1] + scale * v[1])


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def cross(u, v) -> float:
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v) -> float:
    return u[0] * v[0] + u[1] * v[1]


def norm(v) -> float:
    return math.hypot(v[0], v[1])


def intersect_lines(p, dp, q, dq):
    """Intersection of the lines p + t*dp and q + u*dq."""
    det = cross(dp, dq)
    if abs(det) < 1e-14 * max(norm(dp) * norm(dq), 1.0):
        raise OracleError("lines are parallel")
    t = cross(sub(q, p), dq) / det
    return add(p, dp, t)


def intersect_rays(p, dp, q, dq):
    """Intersection of two forward rays; raises if it lies behind either."""
    det = cross(dp, dq)
    if abs(det) < 1e-14 * max(norm(dp) * norm(dq), 1.0):
        raise OracleError("rays are parallel")
    t = cross(sub(q, p), dq) / det
    u = cross(sub(q, p), dp) / det
    if t < 0 or u < 0:
        raise OracleError("rays do not meet forward of their origins")
    return add(p, dp, t)


def angle_at(apex, a, b) -> float:
    """Unsigned angle at apex between directions to a and b, degrees."""
    u, w = sub(a, apex), sub(b, apex)
    return math.degrees(math.atan2(abs(cross(u, w)), dot(u, w)))


def signed_angle(u, v) -> float:
    """Signed angle from u to v, degrees in (-180, 180]."""
    return math.degrees(math.atan2(cross(u, v), dot(u, v)))


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def point_line_distance(p, a, d) -> float:
    """Distance from p to the line through a with direction d."""
    return abs(cross(d, sub(p, a))) / norm(d)


def diameter(points) -> float:
    pts = list(points)
    return max(dist(p, q) for p in pts for q in pts)


def triangle_from_angles(beta: float, gamma: float):
    """Apex of a triangle on base (0,0)-(1,0) with base angles beta, gamma.

    Returns coordinates B=(0,0), C=(1,0), A above the base.
    """
    if beta + gamma >= 180 or min(beta, gamma) <= 0:
        raise OracleError("invalid base angles")
    b, c = (0.0, 0.0), (1.0, 0.0)
    a = intersect_rays(b, unit(beta), c, rotate((-1.0, 0.0), -gamma))
    return a, b, c


def similarity_align(source: dict, target: dict, keys=None) -> dict:
    """Map `source` points onto `target`'s frame by the similarity fixed on
    the first two shared keys; no reflection (both inputs assumed equally
    oriented)."""
    keys = list(keys) if keys is not None else [k for k in source if k in target]
    k0, k1 = keys[0], keys[1]
    s0, s1 = source[k0], source[k1]
    t0, t1 = target[k0], target[k1]
    ds, dt = sub(s1, s0), sub(t1, t0)
    ns2 = dot(ds, ds)
    if ns2 == 0:
        raise OracleError("degenerate alignment edge")
    # complex ratio dt/ds
    ar = (dt[0] * ds[0] + dt[1] * ds[1]) / ns2
    ai = (dt[1] * ds[0] - dt[0] * ds[1]) / ns2
    out = {}
    for k, p in source.items():
        d = sub(p, s0)
        out[k] = (t0[0] + ar * d[0] - ai * d[1], t0[1] + ai * d[0] + ar * d[1])
    return out
