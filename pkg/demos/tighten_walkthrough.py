"""Tighten a random loop of multicurves on the six-punctured sphere.

Run: python demos/tighten_walkthrough.py [seed]
"""
import random
import sys

from isofill.surface import new_surface
from isofill.tightener import (cap_square, check_annulus, random_loop, random_square,
                               tighten_loop)

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 7
T = new_surface(0, 6)
rng = random.Random(seed)

loop = random_loop(T, 5, rng)
print("start:")
for C in loop.curves:
    print("  ", C.weights)

res = tighten_loop(loop)
print(f"\n{res.tightenings} tightening(s) at indices {list(res.log)}, status {res.status}")
if res.shortcut:
    print(f"shortcut {res.shortcut.variant} at {res.shortcut.j}, verified {res.verified}")
print(f"annulus: {res.annulus.size} triangles (at most {2 * len(loop)}), "
      f"glues validly: {check_annulus(res)}")

# a square of curves caps off with 2 or 4 triangles
sizes = [len(cap_square(random_square(T, rng))[0].triangles) for _ in range(20)]
print("\nsquare caps:", sizes)
