import math
import random
from fractions import Fraction as F

import pytest

from isofill.cat0 import (EuclideanShape, MetricFlagComplex, ThickFailure, check_bounded,
                          check_thick, grid_boundary_loop, grid_complex, planar_oracle,
                          quadratic_fill, suspension_complex)
from isofill.complex_core import CombLoop, FiniteFlagComplex, count_triangles, validate_filling


def one_triangle(a=(0, 0), b=(4, 0), c=(0, 3)):
    K = FiniteFlagComplex("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    coords = {k: (F(x), F(y)) for k, (x, y) in zip("abc", (a, b, c))}
    return MetricFlagComplex(K, coords)


def test_bounded_examples():
    K = grid_complex(1)
    unit = MetricFlagComplex(FiniteFlagComplex("ab", [("a", "b")]),
                             {"a": (F(0), F(0)), "b": (F(1), F(0))}, triangles=[("a", "b", "c")][:0])
    r = check_bounded(unit, F(1, 2))
    assert r.D == 1 and r.n == 2
    mixed = MetricFlagComplex(FiniteFlagComplex("abc", [("a", "b"), ("b", "c")]),
                              {"a": (F(0), F(0)), "b": (F(1), F(0)), "c": (F(4), F(0))},
                              triangles=[])
    assert check_bounded(mixed, 1).D == 3
    assert check_bounded(K, 1).D_sq == 2


def test_suspension_bounded_grows():
    Ds = [check_bounded(suspension_complex(M), 1).D_sq for M in (1, 2, 4, 8)]
    # the embedded edge p--M has squared length M^2 + 1
    assert Ds == [2, 5, 17, 65]


def test_equilateral_thickness():
    # barycentre of a unit equilateral triangle sits at height sqrt(3)/6
    s = EuclideanShape(2, (1, 1, 1))
    assert s.thickness_sq() == F(1, 12)
    assert math.isclose(math.sqrt(s.thickness_sq()), math.sqrt(3) / 6)
    assert 0 < math.sqrt(s.thickness_sq()) < 0.5


def test_grid_shape_thickness():
    # right isosceles triangle with unit legs: h on the hypotenuse is 1/sqrt 2
    th = check_thick(grid_complex(2))
    assert th.eps_sq == F(1, 18)
    assert th.eps <= math.sqrt(2) / 6 < th.eps + F(1, 10 ** 8)


def test_degenerate_shapes_rejected():
    with pytest.raises(ValueError):
        EuclideanShape(2, (1, 1, 4))
    with pytest.raises(ValueError):
        one_triangle((0, 0), (1, 0), (2, 0))


def test_needle_family_fails():
    def needle(M):
        K = FiniteFlagComplex("abc", [("a", "b"), ("b", "c"), ("a", "c")])
        coords = {"a": (F(0), F(0)), "b": (F(1), F(0)), "c": (F(0), F(1, M))}
        return MetricFlagComplex(K, coords, extension=needle, scale=M)
    with pytest.raises(ThickFailure) as exc:
        check_thick(needle(1))
    assert exc.value.witness


def test_suspension_thick_fails():
    for M in (3, 4, 5):
        with pytest.raises(ThickFailure):
            check_thick(suspension_complex(M))


def test_planar_oracle():
    K = grid_complex(2)
    O = planar_oracle(K)
    rng = random.Random(3)
    for _ in range(50):
        x = (F(rng.randint(0, 20), 10), F(rng.randint(0, 20), 10))
        y = (F(rng.randint(0, 20), 10), F(rng.randint(0, 20), 10))
        assert math.isclose(math.sqrt(O.length_sq(x, y)),
                            math.hypot(float(x[0] - y[0]), float(x[1] - y[1])))
    a, b = K.coords[0], K.coords[1]
    assert O.length_sq(a, b) == 1
    mid = O.point_at(a, b, F(1, 2))
    assert set(O.carrier(mid)) == {0, 1}
    inside = (F(1, 3), F(2, 3))
    assert len(O.carrier(inside)) == 3


def test_nonconvex_support_rejected():
    K = FiniteFlagComplex("abcde", [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "e"),
                                     ("c", "e")])
    coords = {"a": (F(0), F(0)), "b": (F(2), F(0)), "c": (F(1), F(1)),
              "d": (F(2), F(2)), "e": (F(0), F(2))}
    with pytest.raises(ValueError):
        planar_oracle(MetricFlagComplex(K, coords))


def test_one_triangle_fill():
    K = one_triangle()
    P, f, rep = quadratic_fill(K, planar_oracle(K), CombLoop("abc"))
    assert validate_filling(P, f, CombLoop("abc"), K.complex, "bijective")
    assert rep.check()
    assert count_triangles(P) == rep.total == len(P.triangles)


def test_grid_fill_bookkeeping():
    K = grid_complex(2)
    loop = grid_boundary_loop(2)
    P, f, rep = quadratic_fill(K, planar_oracle(K), loop)
    assert validate_filling(P, f, loop, K.complex, "bijective")
    assert rep.check()
    assert all(c == rep.n[i] + rep.n[i + 1] - 1 for i, c in enumerate(rep.cell_counts))
    # e(m) and e(m+1) share one endpoint; the t-values decrease along m
    by_cell = {}
    for i, m, side, jm, e in rep.events:
        by_cell.setdefault(i, []).append(e)
    for edges in by_cell.values():
        for e, g in zip(edges, edges[1:]):
            assert (e[0] - g[0], e[1] - g[1]) in ((1, 0), (0, 1))
