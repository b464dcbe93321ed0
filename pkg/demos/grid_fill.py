"""Sweep a quadratic filling of the boundary of the 4x4 grid.

Run: python demos/grid_fill.py
"""
from isofill.cat0 import (check_bounded, check_thick, grid_boundary_loop, grid_complex,
                          planar_oracle, quadratic_fill)
from isofill.complex_core import count_triangles, validate_filling

K = grid_complex(4)
loop = grid_boundary_loop(4)
thick = check_thick(K)
bounded = check_bounded(K, thick.eps / 2)
print(f"eps = {float(thick.eps):.4f}, D = {float(bounded.D):.4f}")

P, f, rep = quadratic_fill(K, planar_oracle(K), loop, thick, bounded)
print("valid:", bool(validate_filling(P, f, loop, K.complex, "bijective")))
print(f"{rep.N} geodesic cells, collar of {rep.collar_count} triangles")
print("cell sizes n(i) + n(i+1) - 1:", rep.cell_counts[:12], "...")
print(f"{count_triangles(P)} triangles against the bound {float(rep.bound):.0f}")
rep.check()
