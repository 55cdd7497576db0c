"""Enumerate pairing-pattern classes for closed fans of 2..5 triangles.

A pattern records, for each triangle of a closed fan, which triangle its
entering rim angle is paired with.  Classes are counted up to rotation,
direction reversal, and relabeling; `members` counts the raw labeled
patterns each class absorbs, so the members always sum to (n!)^2.
"""

import math

from trifig import enumerate_patterns

for n in range(2, 6):
    classes = enumerate_patterns(n)
    print(f"n = {n}: {len(classes)} classes, "
          f"{sum(c.members for c in classes)} raw patterns "
          f"(expected {math.factorial(n) ** 2})")
    by_sig: dict = {}
    for c in classes:
        by_sig.setdefault(c.signature, []).append(c)
    for sig in sorted(by_sig, key=lambda s: (s.count('d'), s)):
        names = ", ".join(str(c.canonical) for c in by_sig[sig])
        print(f"  {sig}: {len(by_sig[sig])} class(es)  [{names}]")
    print()
