"""Walk through the core pipeline on a small figure.

An equilateral triangle fanned from its incenter: three triangles around one
interior vertex.  We check the realizability conditions, construct
coordinates, verify them against hand trigonometry, and write an SVG.
"""

import math

from trifig import AngleAssignment, Figure, realizability_verdict, realize
from trifig.figure import serialize_figure
from trifig.svg import render_svg

figure = Figure([("A", "B", "I"), ("B", "C", "I"), ("C", "A", "I")],
                name="incenter")
angles = AngleAssignment.from_rows([(30.0, 30.0, 120.0)] * 3)

print("document form:")
print(serialize_figure(figure, angles.values))
print()

verdict = realizability_verdict(figure, angles)
for report in verdict.reports.values():
    print(report)
print(f"=> realizable via {verdict.via}")
print()

real = realize(figure, angles)
for label in sorted(real.coords):
    x, y = real.point(label)
    print(f"{label}: ({x:.9f}, {y:.9f})")

# the incenter of a unit equilateral triangle sits at height sqrt(3)/6
expected = math.sqrt(3.0) / 6.0
got = real.point("I")[1]
print(f"\nincenter height: {got:.12f}  (exact {expected:.12f}, "
      f"error {abs(got - expected):.2e})")

with open("incenter.svg", "w", encoding="utf-8") as fh:
    fh.write(render_svg(real, figure, annotate_angles=True))
print("wrote incenter.svg")
