"""How the last-triangle closure residual reacts to rotation-product errors.

A closed fan can be laid out triangle by triangle; the final triangle arrives
with both its rim corners already placed, and the mismatch between its
assigned and measured angles is the closure residual.  The residual is near
machine precision exactly when the sine-rotation condition holds, and grows
smoothly with the size of a deliberate violation.
"""

import math

import numpy as np

from trifig import AngleAssignment, check_sine_rotation, closure_residual
from trifig.theorems import random_pairing_fan

rng = np.random.default_rng(2024)
figure, angles = random_pairing_fan(rng, 6)

print(f"fan of {len(figure.triangles)} triangles around 'O'")
print(f"baseline closure residual: {closure_residual(figure, angles, 'O').worst:.2e} deg")
print()
print("scaling one entering sine by (1 + x):")
print(f"{'x':>8}  {'residual (deg)':>14}  checker")
for x in (1e-12, 1e-9, 1e-6, 1e-3, 1e-2, 1e-1):
    rows = [list(r) for r in angles.values]
    slot = figure.triangles[0].slot_of("R0")
    hub = figure.triangles[0].slot_of("O")
    a = rows[0][slot]
    bumped = math.degrees(math.asin(min(1.0, (1.0 + x) * math.sin(math.radians(a)))))
    if a > 90.0:
        bumped = 180.0 - bumped
    rows[0][hub] -= bumped - a  # keep the triangle's 180 sum intact
    rows[0][slot] = bumped
    perturbed = AngleAssignment(tuple(tuple(r) for r in rows))
    res = closure_residual(figure, perturbed, "O").worst
    verdict = "pass" if check_sine_rotation(figure, perturbed).passed else "FAIL"
    print(f"{x:8.0e}  {res:14.3e}  {verdict}")
