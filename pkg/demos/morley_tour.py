"""Classic Morley, its hexagon generalization, and the limit between them.

Each scenario is built twice: once as an angle assignment run through the
realizer, once as a direct ruler-and-compass style coordinate construction.
The two must agree up to similarity.
"""

from trifig.theorems import compare_to_oracle, run_verification
from trifig.theorems._geom import dist, similarity_align
from trifig.theorems.scenarios import build_morley_classic, build_morley_hexagon

print("classic Morley at (70, 60, 50):")
classic = build_morley_classic(70.0, 60.0, 50.0)
for check, dev in classic.checks.items():
    print(f"  {check}: deviation {dev:.2e}")
print(f"  realizer vs oracle: {compare_to_oracle(classic):.2e} of diameter")
print()

print("hexagon generalization at (80, 95, 110), angle-sum surplus 105:")
hexa = build_morley_hexagon(80.0, 95.0, 110.0)
print(f"  equal corner angle delta = {hexa.params['delta']:.6f}")
for check, dev in hexa.checks.items():
    print(f"  {check}: deviation {dev:.2e}")
print()

print("limit: hexagon angle sum -> 180 recovers the classic picture")
for eps in (1e-2, 1e-4, 1e-6):
    h = build_morley_hexagon(70.0 + eps / 3, 60.0 + eps / 3, 50.0 + eps / 3)
    aligned = similarity_align(h.oracle, classic.oracle, keys=("A", "B"))
    diam = max(dist(p, q) for p in classic.oracle.values()
               for q in classic.oracle.values())
    dev = max(dist(aligned[a], classic.oracle[b]) / diam
              for a, b in (("P1", "W"), ("P2", "U"), ("P3", "V")))
    print(f"  surplus {eps:g}: inner-triangle deviation {dev:.2e}")
print()

print("randomized campaigns (100 trials each):")
for name in ("morley_classic", "morley_hexagon", "morley_partial"):
    print(" ", run_verification(name, trials=100, seed=0).summary())
