"""The suspension of a line: bounded shapes, no uniform thickness, and
filling sizes that keep growing.

Run: python demos/suspension_growth.py
"""
from isofill.cat0 import ThickFailure, check_bounded, check_thick, suspension_complex
from isofill.complex_core import CombLoop
from isofill.filler_search import certify_infeasible_within, minimal_fill

K = suspension_complex(6)
print(f"{K.name}: {len(K.complex.vertices())} vertices, {len(K.triangles)} triangles")

# every finite window has a largest edge
print("max edge length D =", float(check_bounded(K, 1).D))

# but the angles at the apexes shrink as the window grows
try:
    check_thick(K)
except ThickFailure as exc:
    print("no thickness constant:", exc)

# the 4-loops p, 0, q, k all have length 4, yet need more and more triangles
for k in range(1, 6):
    loop = CombLoop(["p", 0, "q", k])
    res = minimal_fill(loop, K.complex, 2 * k + 2)
    cert = certify_infeasible_within(loop, K.complex, res.count - 1)
    print(f"k={k}: minimal filling {res.count} triangles, "
          f"none with {cert.budget} (replay {cert.replay()})")
