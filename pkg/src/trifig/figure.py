"""Combinatorial model of triangulated plane figures.

A figure is a finite, edge-connected collection of triangles in which two
triangles share nothing, a single vertex, or a full edge.  Everything here is
purely combinatorial: no coordinates, no angle values.  The triangles incident
to a vertex form its *fan*; a closed fan marks the vertex as interior, an open
chain marks it as exterior.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class FigureError(ValueError):
    """Structurally unusable figure input."""


@dataclass(frozen=True)
class Triangle:
    """One oriented triangle: corner labels in counterclockwise order."""

    corners: tuple[str, str, str]
    index: int

    def slot_of(self, label: str) -> int:
        return self.corners.index(label)

    def __contains__(self, label: str) -> bool:
        return label in self.corners


@dataclass(frozen=True)
class Fan:
    """Triangles incident to one vertex, consecutive ones sharing an edge.

    ``order`` holds triangle indices.  ``rim`` holds, for each fan triangle,
    the pair of its non-central corner labels ``(enter, exit)``: ``enter`` is
    shared with the previous fan triangle, ``exit`` with the next one.  For an
    open chain the first ``enter`` and last ``exit`` touch no neighbour but
    still name the two rim corners.
    """

    vertex: str
    order: tuple[int, ...]
    rim: tuple[tuple[str, str], ...]
    closed: bool

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class Violation:
    kind: str
    locus: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "structurally valid"
        return "\n".join(f"[{v.kind}] at {v.locus}: {v.detail}" for v in self.violations)


def _edge(a: str, b: str) -> frozenset:
    return frozenset((a, b))


class Figure:
    """Immutable combinatorial figure.

    Fans are derived from shared-edge incidence, never read from input.
    Construction is lenient: structural defects are collected and reported by
    :func:`validate_structure`; operations that need fans raise
    :class:`FigureError` when the figure is broken.
    """

    def __init__(self, triangles, vertices=None, name: str = ""):
        self.name = name
        tris = []
        for i, corners in enumerate(triangles):
            corners = tuple(corners)
            if len(corners) != 3:
                raise FigureError(f"triangle {i}: expected 3 corners, got {len(corners)}")
            tris.append(Triangle(corners, i))
        self.triangles: tuple[Triangle, ...] = tuple(tris)

        seen: list[str] = []
        for t in self.triangles:
            for c in t.corners:
                if c not in seen:
                    seen.append(c)
        if vertices is None:
            self.vertices: tuple[str, ...] = tuple(seen)
        else:
            vertices = tuple(vertices)
            if len(set(vertices)) != len(vertices):
                raise FigureError("duplicate vertex labels")
            unknown = [c for c in seen if c not in vertices]
            if unknown:
                raise FigureError(f"triangle references unknown vertex {unknown[0]!r}")
            self.vertices = vertices

        # edge -> indices of triangles carrying it
        edges: dict[frozenset, list[int]] = {}
        incident: dict[str, list[int]] = {v: [] for v in self.vertices}
        self._defects: list[Violation] = []
        for t in self.triangles:
            if len(set(t.corners)) != 3:
                self._defects.append(
                    Violation("degenerate-triangle", f"T{t.index}", "repeated corner label")
                )
                continue
            for k in range(3):
                e = _edge(t.corners[k], t.corners[(k + 1) % 3])
                edges.setdefault(e, []).append(t.index)
            for c in t.corners:
                incident[c].append(t.index)
        self.edges: dict[frozenset, tuple[int, ...]] = {e: tuple(ts) for e, ts in edges.items()}
        self._incident = {v: tuple(ts) for v, ts in incident.items()}

        for e, ts in self.edges.items():
            if len(ts) > 2:
                a, b = sorted(e)
                self._defects.append(
                    Violation("edge-multiplicity", f"({a},{b})",
                              f"edge borne by {len(ts)} triangles")
                )

        self._check_connected()
        self.fans: dict[str, Fan] = {}
        for v in self.vertices:
            fan = self._walk_fan(v)
            if fan is not None:
                self.fans[v] = fan

    # -- derivation helpers -------------------------------------------------

    def _check_connected(self) -> None:
        n = len(self.triangles)
        if n == 0:
            self._defects.append(Violation("empty", "figure", "no triangles"))
            return
        adj: dict[int, set[int]] = {i: set() for i in range(n)}
        for ts in self.edges.values():
            for a in ts:
                for b in ts:
                    if a != b:
                        adj[a].add(b)
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != n:
            missing = min(set(range(n)) - seen)
            self._defects.append(
                Violation("not-edge-connected", f"T{missing}",
                          "triangle adjacency graph is disconnected")
            )

    def _walk_fan(self, v: str):
        """Reconstruct the fan at v, or record a defect and return None."""
        tris = [i for i in self._incident[v] if len(set(self.triangles[i].corners)) == 3]
        if not tris:
            return None
        # edges through v, and which incident triangles carry each
        spokes: dict[frozenset, list[int]] = {}
        for i in tris:
            t = self.triangles[i]
            for c in t.corners:
                if c != v:
                    spokes.setdefault(_edge(v, c), []).append(i)
        for e, ts in spokes.items():
            if len(ts) > 2:
                self._defects.append(
                    Violation("fan", v, "more than two triangles on an edge through vertex")
                )
                return None
        boundary = [e for e, ts in spokes.items() if len(ts) == 1]
        closed = not boundary
        if closed:
            start = min(tris)
            t = self.triangles[start]
            # deterministic entry spoke: lexicographically smallest rim label
            enter = min(c for c in t.corners if c != v)
        else:
            # start at an end of the open chain, lowest triangle index among ends
            ends = sorted((min(ts), e) for e, ts in spokes.items() if len(ts) == 1)
            start, first_spoke = ends[0][0], ends[0][1]
            enter = next(iter(first_spoke - {v}))

        order: list[int] = []
        rim: list[tuple[str, str]] = []
        cur, prev_label = start, enter
        while True:
            t = self.triangles[cur]
            other = [c for c in t.corners if c != v]
            if prev_label not in other:
                self._defects.append(Violation("fan", v, "fan walk broke"))
                return None
            exit_label = other[0] if other[1] == prev_label else other[1]
            order.append(cur)
            rim.append((prev_label, exit_label))
            nxt = [i for i in spokes[_edge(v, exit_label)] if i != cur]
            if not nxt:
                break
            cur = nxt[0]
            prev_label = exit_label
            if cur == start:
                break
            if cur in order:
                self._defects.append(Violation("fan", v, "fan walk revisits a triangle"))
                return None
        if len(order) != len(tris):
            self._defects.append(
                Violation("fan", v, "incident triangles do not form a single fan")
            )
            return None
        return Fan(v, tuple(order), tuple(rim), closed)

    # -- queries ------------------------------------------------------------

    def fan(self, v: str) -> Fan:
        if v not in self.fans:
            raise FigureError(f"no well-formed fan at vertex {v!r}")
        return self.fans[v]

    def is_interior(self, v: str) -> bool:
        return self.fan(v).closed

    def interior_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if v in self.fans and self.fans[v].closed)

    def exterior_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if v in self.fans and not self.fans[v].closed)

    def boundary_edges(self) -> tuple[frozenset, ...]:
        return tuple(e for e, ts in self.edges.items() if len(ts) == 1)

    def interior_edges(self) -> tuple[frozenset, ...]:
        return tuple(e for e, ts in self.edges.items() if len(ts) == 2)

    def __repr__(self) -> str:
        return f"Figure({self.name!r}, {len(self.vertices)} vertices, {len(self.triangles)} triangles)"


def validate_structure(figure: Figure) -> ValidationReport:
    """Report every violated structural invariant; empty report means valid."""
    return ValidationReport(tuple(figure._defects))


def classify_vertices(figure: Figure) -> dict[str, str]:
    """Map each vertex to 'interior' or 'exterior' from fan closure."""
    report = validate_structure(figure)
    if not report.ok:
        raise FigureError(f"cannot classify a structurally invalid figure:\n{report}")
    return {v: ("interior" if figure.fans[v].closed else "exterior") for v in figure.vertices}


# -- document format --------------------------------------------------------

def parse_document(text: str):
    """Parse a figure document; returns (Figure, angle rows or None).

    The document is JSON with keys ``name``, ``vertices``, ``triangles`` and
    an optional ``angles`` block aligned with the triangle list.  The figure
    must be structurally valid.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FigureError(f"malformed document: {exc}") from exc
    if not isinstance(doc, dict) or "triangles" not in doc:
        raise FigureError("malformed document: missing 'triangles'")
    figure = Figure(
        doc["triangles"],
        vertices=doc.get("vertices"),
        name=doc.get("name", ""),
    )
    report = validate_structure(figure)
    if not report.ok:
        raise FigureError(str(report))
    angles = doc.get("angles")
    if angles is not None:
        if len(angles) != len(figure.triangles):
            raise FigureError("angles block not aligned with triangle list")
        angles = [tuple(float(x) for x in row) for row in angles]
        if any(len(row) != 3 for row in angles):
            raise FigureError("each angles row must list 3 corner values")
    return figure, angles


def parse_figure(text: str) -> Figure:
    figure, _ = parse_document(text)
    return figure


def serialize_figure(figure: Figure, angles=None) -> str:
    """Canonical document serialization; inverse of :func:`parse_document`."""
    doc = {
        "name": figure.name,
        "vertices": list(figure.vertices),
        "triangles": [list(t.corners) for t in figure.triangles],
    }
    if angles is not None:
        doc["angles"] = [[float(x) for x in row] for row in angles]
    return json.dumps(doc, indent=2)
