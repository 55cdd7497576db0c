"""Deterministic SVG rendering of realizations."""

from __future__ import annotations

from .figure import Figure
from .realize import Realization, measure_angles

_MARGIN = 0.08
_SIZE = 640.0


def _fmt(x: float) -> str:
    # stable 9-significant-digit formatting; avoid "-0"
    s = f"{x:.9g}"
    return "0" if s == "-0" else s


def render_svg(realization: Realization, figure: Figure,
               annotate_angles: bool = False) -> str:
    """Perimeter polygon, interior edges, vertex labels, optional angle text."""
    xs = [p[0] for p in realization.coords.values()]
    ys = [p[1] for p in realization.coords.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    pad = span * _MARGIN
    scale = _SIZE / (span + 2 * pad)

    def to_px(p):
        # y flipped: SVG grows downward
        return ((p[0] - min(xs) + pad) * scale, (max(ys) - p[1] + pad) * scale)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(_SIZE)}" '
        f'height="{_fmt(_SIZE)}" viewBox="0 0 {_fmt(_SIZE)} {_fmt(_SIZE)}">',
    ]
    boundary = set(figure.boundary_edges())
    perimeter = []
    from .realize import boundary_polygon
    for label in boundary_polygon(realization, figure):
        x, y = to_px(realization.coords[label])
        perimeter.append(f"{_fmt(x)},{_fmt(y)}")
    lines.append(f'<polygon points="{" ".join(perimeter)}" '
                 'fill="none" stroke="black" stroke-width="2"/>')
    for e in sorted(figure.interior_edges(), key=sorted):
        a, b = sorted(e)
        (x1, y1), (x2, y2) = to_px(realization.coords[a]), to_px(realization.coords[b])
        lines.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                     f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                     'stroke="gray" stroke-width="1"/>')
    for label in figure.vertices:
        x, y = to_px(realization.coords[label])
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
        lines.append(f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" '
                     f'font-size="14">{label}</text>')
    if annotate_angles:
        measured = measure_angles(realization, figure)
        for t in figure.triangles:
            pts = [realization.coords[c] for c in t.corners]
            cx = sum(p[0] for p in pts) / 3.0
            cy = sum(p[1] for p in pts) / 3.0
            for s in range(3):
                p = pts[s]
                ax = p[0] + 0.25 * (cx - p[0])
                ay = p[1] + 0.25 * (cy - p[1])
                x, y = to_px((ax, ay))
                lines.append(f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="10" '
                             f'fill="darkred">{_fmt(measured.values[t.index][s])}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
