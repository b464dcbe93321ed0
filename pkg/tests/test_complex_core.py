import pytest

from isofill.complex_core import (CombLoop, FiniteFlagComplex, OracleError,
                                  SimplicialFillingMap, TriangulatedDisc, canonical_cycle,
                                  count_triangles, parse_complex, parse_filling, parse_loop,
                                  serialize_complex, serialize_filling, serialize_loop,
                                  validate_filling, validate_loop)
from isofill.cat0 import suspension_complex


def square_complex(with_diagonal=True):
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
    if with_diagonal:
        edges.append(("a", "c"))
    return FiniteFlagComplex("abcd", edges)


def test_constant_loop_is_valid():
    K = FiniteFlagComplex(["v"])
    assert validate_loop(CombLoop(["v", "v", "v"]), K)


def test_suspension_loops():
    K = suspension_complex(3).complex
    assert validate_loop(CombLoop(["p", 0, "q", 1]), K)
    assert not validate_loop(CombLoop([0, 2]), K)


def test_unknown_vertex_is_an_oracle_error():
    K = square_complex()
    with pytest.raises(OracleError):
        validate_loop(CombLoop(["a", "z"]), K)


def test_single_triangle_filling():
    K = FiniteFlagComplex("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    P = TriangulatedDisc([(0, 1, 2)], [0, 1, 2])
    f = SimplicialFillingMap({0: "a", 1: "b", 2: "c"})
    assert validate_filling(P, f, CombLoop("abc"), K, "bijective")
    assert count_triangles(P) == 1


def test_two_triangle_square():
    P = TriangulatedDisc([(0, 1, 2), (0, 2, 3)], [0, 1, 2, 3])
    f = SimplicialFillingMap(dict(enumerate("abcd")))
    loop = CombLoop("abcd")
    assert validate_filling(P, f, loop, square_complex(True))
    res = validate_filling(P, f, loop, square_complex(False))
    assert not res and res.kind == "map" and "non-simplex image" in res.reason
    assert count_triangles(P) == 2
    assert P.gluings == [((0, 1), (0, 2))]


def test_structural_failures_are_separate():
    K = square_complex()
    f = SimplicialFillingMap(dict(enumerate("abcd")))
    # two triangles touching only at a vertex: boundary is pinched
    P = TriangulatedDisc([(0, 1, 2), (0, 3, 4)], [0, 1, 2, 0, 3, 4])
    res = validate_filling(P, f, CombLoop("abcd"), K)
    assert not res and res.kind == "structure"
    # an annulus has two boundary circles
    ann = [(0, 1, 4), (1, 5, 4), (1, 2, 5), (2, 6, 5), (2, 3, 6), (3, 7, 6), (3, 0, 7), (0, 4, 7)]
    res = validate_filling(TriangulatedDisc(ann, [0, 1, 2, 3]), f, CombLoop("abcd"), K)
    assert not res and res.kind == "structure"


def test_relabel_and_rotation_invariance():
    K = square_complex()
    P = TriangulatedDisc([(10, 11, 12), (10, 12, 13)], [10, 11, 12, 13])
    f = SimplicialFillingMap({10: "a", 11: "b", 12: "c", 13: "d"})
    assert validate_filling(P, f, CombLoop("cdab"), K)
    assert validate_filling(P, f, CombLoop("dcba"), K)


def test_edges_versus_triangles():
    # every accepted filling has 3F >= E
    P = TriangulatedDisc([(0, 1, 2), (0, 2, 3)], [0, 1, 2, 3])
    assert 3 * count_triangles(P) >= len(P.edge_faces())
    bd_edges = [e for e, fs in P.edge_faces().items() if len(fs) == 1]
    assert len(bd_edges) == 4


def test_genus_one_surface_with_boundary():
    # a one-holed torus: 3x3 torus grid with one triangle removed
    tris = []
    for x in range(3):
        for y in range(3):
            a, b = 3 * x + y, 3 * ((x + 1) % 3) + y
            c, d = 3 * x + (y + 1) % 3, 3 * ((x + 1) % 3) + (y + 1) % 3
            tris += [(a, b, d), (a, d, c)]
    hole = tris.pop()
    P = TriangulatedDisc(tris, list(hole), genus=1)
    K = FiniteFlagComplex(range(9), [(u, v) for u in range(9) for v in range(u + 1, 9)])
    f = SimplicialFillingMap({v: v for v in range(9)})
    assert validate_filling(P, f, CombLoop(hole), K)
    res = validate_filling(TriangulatedDisc(tris, list(hole), genus=0), f, CombLoop(hole), K)
    assert not res and "Euler" in res.reason


def test_canonical_form():
    assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
    assert canonical_cycle((1, 3, 2)) == (1, 2, 3)
    assert CombLoop(["q", 0, "p", 2]).canonical() == CombLoop(["p", 0, "q", 2]).canonical()


def test_round_trips():
    K = suspension_complex(2).complex
    K2, _, _ = parse_complex(serialize_complex(K))
    assert K2 == K
    loop = CombLoop(["p", 0, "q", 2])
    assert parse_loop(serialize_loop(loop)) == loop
    P = TriangulatedDisc([(0, 1, 2), (0, 2, 3)], [0, 1, 2, 3])
    f = SimplicialFillingMap({0: "p", 1: 0, 2: "q", 3: 1})
    P2, f2 = parse_filling(serialize_filling(P, f))
    assert P2 == P and f2 == f
