"""A square of arcs on the six-punctured sphere and its lower-bound certificate.

The four corners alternate between arcs inside Y and arcs inside Z.
Every filling has a monochromatic path across it, and projecting that
path to Y or Z bounds the number of triangles from below.

Run: python demos/hex_square.py [k]
"""
import sys

from isofill.filler_search import minimal_fill
from isofill.hex_certifier import build_square_loop, certify

k = int(sys.argv[1]) if len(sys.argv) > 1 else 2
s = build_square_loop(0, 6, k)
print(s.to_text())

res = minimal_fill(s.loop, s.oracle(3), 8)
print(res, "(window 3)")
cert = certify(res.disc, res.fmap, s)
print(cert.to_text())
print("holds:", cert.holds)
