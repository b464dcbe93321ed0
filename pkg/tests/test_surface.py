import random
from fractions import Fraction
from math import floor

import pytest

from isofill.surface import (Arc, Curve, Cut, CutError, Lamination, LaminationError,
                             MappingClass, apply, arc_boundary_curves, basic_curves,
                             boundary_neighborhood, components, cut, cuts, dehn_twist,
                             filled_subsurface, fills, flip, flip_laminations,
                             from_components, from_path, intersection_number,
                             is_essential, misses, new_surface, parse_lamination,
                             path_intersection, random_arc, random_curve,
                             serialize_lamination, tropical_flip_weight)
from isofill.surface.generate import separating_curve
from isofill.surface.triangulation import SurfaceError


def lam(T, *paths):
    return from_components(T, [(p, 1) for p in paths])


def torus_curve(T, p, q):
    """Straight line of slope (p, q) on the square torus, read as the
    sequence of sides it crosses: x = 0 (A), y = 0 (B), y = x (D)."""
    x0, y0 = Fraction(71, 100), Fraction(23, 100)      # below the diagonal
    events = []
    for label, d, start in (("A", p, x0), ("B", q, y0), ("D", p - q, x0 - y0)):
        for k in range(1, abs(d) + 1):
            n = floor(start) + k if d > 0 else floor(start) + 1 - k
            events.append((abs(n - start) / abs(d), label))
    events.sort()
    assert len({t for t, _ in events}) == len(events), "line hits a puncture"
    labels = {"A": 0, "B": 1, "D": 2}
    t = 0
    word = []
    for _, lab in events:
        slot = next(3 * t + s for s in range(3) if T.labels[3 * t + s] == labels[lab])
        word.append(slot)
        t = T.glue[slot] // 3
    return Curve.make(T, word)


def scrambled(g, p, rng, n=6):
    T = new_surface(g, p)
    for _ in range(n):
        e = rng.randrange(T.E)
        if T.flippable(e):
            T = flip(T, e)[0]
    return T


# ---------------------------------------------------------------- basics

@pytest.mark.parametrize("g,p,F,E", [(0, 3, 2, 3), (1, 1, 2, 3), (0, 6, 8, 12), (2, 1, 6, 9)])
def test_new_surface_sizes(g, p, F, E):
    T = new_surface(g, p)
    assert (T.F, T.E, T.genus, T.num_punctures) == (F, E, g, p)


def test_nonhyperbolic_rejected():
    with pytest.raises(SurfaceError):
        new_surface(0, 2)
    with pytest.raises(SurfaceError):
        new_surface(1, 0)


def test_file_round_trip():
    rng = random.Random(3)
    T = new_surface(0, 5)
    L = lam(T, random_curve(T, rng))
    text = serialize_lamination(L)
    assert text.splitlines()[:2] == ["lamination v1", "surface 0 5"]
    assert parse_lamination(text) == L


def test_bad_weights_rejected():
    T = new_surface(1, 1)
    with pytest.raises(LaminationError):
        Lamination(T, (1, 1, 1))


# ----------------------------------------------------------------- flips

def test_flip_involution_random():
    rng = random.Random(11)
    for g, p in [(0, 5), (1, 2), (0, 6)]:
        for _ in range(40):
            T = scrambled(g, p, rng)
            if rng.random() < 0.3:
                a = random_arc(T, rng, 1)
                L = lam(T, a, arc_boundary_curves(T, a)[0])
            else:
                L = lam(T, random_curve(T, rng))
            e = rng.randrange(T.E)
            if not T.flippable(e):
                continue
            T2, (L2,) = flip_laminations(T, e, L)
            T3, (L3,) = flip_laminations(T2, e, L2)
            assert T3 == T
            assert L3.weights == L.weights


def test_tropical_rule_square_example():
    # square weights (1, 0, 1, 0) around an edge of weight 1
    assert max(1 + 1, 0 + 0) - 1 == 1
    T = new_surface(0, 4)
    rng = random.Random(5)
    for _ in range(30):
        c = random_curve(T, rng)
        e = rng.randrange(T.E)
        if not T.flippable(e):
            continue
        T2, (L2,) = flip_laminations(T, e, lam(T, c))
        assert L2.weights[e] == tropical_flip_weight(T, e, c.weights(T))


def test_flip_preserves_intersection():
    rng = random.Random(8)
    T = new_surface(0, 5)
    for _ in range(12):
        a, b = lam(T, random_curve(T, rng)), lam(T, random_curve(T, rng))
        before = intersection_number(a, b)
        S = T
        for _ in range(3):
            e = rng.randrange(S.E)
            if S.flippable(e):
                S, (a, b) = flip_laminations(S, e, a, b)
        assert intersection_number(a, b) == before


# ---------------------------------------------------------- intersection

TORUS = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (3, 2), (2, -3), (3, 1)]


def test_torus_intersection_matches_flat_model():
    T = new_surface(1, 1)
    cs = {pq: torus_curve(T, *pq) for pq in TORUS}
    for (p, q), a in cs.items():
        for (r, s), b in cs.items():
            assert path_intersection(T, a, b) == abs(p * s - q * r)


def test_standard_torus_pair():
    T = new_surface(1, 1)
    a, b = lam(T, torus_curve(T, 1, 0)), lam(T, torus_curve(T, 0, 1))
    assert intersection_number(a, b) == 1
    assert cuts(a, b) and not misses(a, b)
    assert misses(a, a) and intersection_number(a, a) == 0


def test_intersection_symmetric():
    rng = random.Random(2)
    for g, p in [(0, 5), (1, 2)]:
        T = new_surface(g, p)
        for _ in range(10):
            a = lam(T, random_curve(T, rng))
            b = lam(T, random_arc(T, rng) if rng.random() < 0.5 else random_curve(T, rng))
            assert intersection_number(a, b) == intersection_number(b, a)


def test_pants_curves_miss():
    T = new_surface(0, 5)
    a = separating_curve(T, (0, 1))
    b = separating_curve(T, (0, 1, 2))
    assert misses(lam(T, a), lam(T, b))
    assert cuts(lam(T, a), lam(T, separating_curve(T, (1, 2))))


# ---------------------------------------------------------------- twists

@pytest.mark.parametrize("g,p", [(1, 1), (0, 5)])
def test_twist_identity_small(g, p):
    rng = random.Random(4)
    T = new_surface(g, p)
    seen = 0
    while seen < 3:
        a, b = random_curve(T, rng, 1), random_curve(T, rng, 1)
        i = path_intersection(T, a, b)
        if i == 0:
            continue
        seen += 1
        A, B = lam(T, a), lam(T, b)
        for n in (1, 2):
            assert intersection_number(dehn_twist(A, B, n), A) == n * i * i


def test_twist_trivia():
    rng = random.Random(6)
    T = new_surface(0, 5)
    a, b = lam(T, random_curve(T, rng)), lam(T, random_curve(T, rng))
    assert apply(MappingClass.twist(b, 0), a) == a
    assert apply(MappingClass.twist(b, 3), b) == b
    m = MappingClass.twist(b, 2) * MappingClass.twist(b, 3)
    assert apply(m, a) == apply(MappingClass.twist(b, 5), a)
    w = MappingClass.twist(a, 1) * MappingClass.twist(b, -2)
    assert apply(w.inverse(), apply(w, a)) == a


# ----------------------------------------------------- neighbourhoods, fill

def test_boundary_misses_inputs():
    rng = random.Random(9)
    for g, p in [(0, 5), (1, 2), (0, 6)]:
        T = new_surface(g, p)
        for _ in range(5):
            a, b = lam(T, random_curve(T, rng)), lam(T, random_curve(T, rng))
            d = boundary_neighborhood(a, b)
            assert misses(d, a) and misses(d, b)


def test_boundary_of_disjoint_pair_keeps_both():
    T = new_surface(0, 6)
    a, b = separating_curve(T, (0, 1)), separating_curve(T, (3, 4))
    d = boundary_neighborhood(lam(T, a), lam(T, b))
    got = [c for c, _ in d.components()]
    assert a in got and b in got


def test_torus_inside_twice_punctured_torus():
    T = new_surface(1, 2)
    cs = basic_curves(T)
    a, b = next((x, y) for x in cs for y in cs if path_intersection(T, x, y) == 1)
    d = boundary_neighborhood(lam(T, a), lam(T, b))
    (c, m), = d.components()
    pieces = cut(T, d)
    assert sorted((P.genus, len(P.punctures), P.boundaries) for P in pieces) == [(0, 2, 1), (1, 0, 1)]


def test_fills():
    T = new_surface(1, 1)
    a, b = lam(T, torus_curve(T, 1, 0)), lam(T, torus_curve(T, 0, 1))
    assert fills(a, b)
    T = new_surface(0, 5)
    x, y = lam(T, separating_curve(T, (0, 1))), lam(T, separating_curve(T, (2, 3)))
    assert not fills(x, y)


def test_fills_agrees_with_search():
    rng = random.Random(12)
    T = new_surface(0, 5)
    pool = basic_curves(T) + [random_curve(T, rng, 1) for _ in range(25)]
    pool = list(dict.fromkeys(pool))
    for _ in range(6):
        a, b = lam(T, random_curve(T, rng)), lam(T, random_curve(T, rng))
        witness = any(misses(lam(T, c), a) and misses(lam(T, c), b) for c in pool)
        if fills(a, b):
            assert not witness
        else:
            # the filled subsurface's own boundary is a witness
            assert not boundary_neighborhood(a, b).is_empty()


def test_filled_containment():
    T = new_surface(0, 6)
    a, b = separating_curve(T, (0, 1)), separating_curve(T, (1, 2))
    F = filled_subsurface(lam(T, a), lam(T, b))
    assert F.contains(lam(T, separating_curve(T, (0, 2))))
    assert not F.contains(lam(T, separating_curve(T, (3, 4))))
    small = filled_subsurface(lam(T, a), lam(T, a))
    assert small <= F and not F <= small


# ------------------------------------------------------ essential, parts

def test_essential_and_components():
    T = new_surface(0, 5)
    zero = Lamination(T, (0,) * T.E)
    assert not is_essential(zero) and components(zero) == []
    a, b = separating_curve(T, (0, 1)), separating_curve(T, (2, 3))
    parts = components(lam(T, a, b))
    assert len(parts) == 2 and all(is_essential(x) for x in parts)
    loop = Curve.make(T, list(T.puncture_cycles()[0]))
    assert loop.is_peripheral(T)
    assert not is_essential(from_path(T, loop))


# ------------------------------------------------------------------ cut

def test_cut_separating_s06():
    T = new_surface(0, 6)
    g = separating_curve(T, (0, 1, 2))
    pieces = cut(T, lam(T, g))
    assert sorted((P.genus, len(P.punctures), P.boundaries) for P in pieces) == [(0, 3, 1)] * 2
    assert sum(P.chi for P in pieces) == T.chi


def test_cut_nonseparating_s12():
    rng = random.Random(1)
    T = new_surface(1, 2)
    for c in basic_curves(T):
        pieces = cut(T, lam(T, c))
        if len(pieces) == 1:
            P, = pieces
            assert (P.genus, len(P.punctures), P.boundaries) == (0, 2, 2)
            break
    else:
        pytest.fail("no nonseparating basic curve")


def test_cut_rejects_arcs():
    T = new_surface(0, 5)
    with pytest.raises(CutError):
        Cut(T, lam(T, Arc.make(T, (T.primary[0],))))


def test_transfer_keeps_structure():
    rng = random.Random(5)
    T = new_surface(0, 6)
    g = separating_curve(T, (0, 1, 2))
    cu = Cut(T, lam(T, g))
    a, b = separating_curve(T, (0, 1)), separating_curve(T, (1, 2))
    ta, tb = cu.transfer(lam(T, a)), cu.transfer(lam(T, b))
    (ia, La), = ta.items()
    (ib, Lb), = tb.items()
    assert ia == ib and cu.pieces[ia].punctures == {0, 1, 2}
    assert len(La.components()) == 1
    assert intersection_number(La, Lb) == path_intersection(T, a, b)


def test_kappa_two_crossings():
    T = new_surface(0, 6)
    g = separating_curve(T, (0, 1, 2))
    L = lam(T, separating_curve(T, (2, 3)))
    assert intersection_number(lam(T, g), L) == 2
    k = Cut(T, lam(T, g)).kappa(L)
    ends = sum(2 for v in k.values() for _ in v.components())
    assert ends == 4
    assert Cut(T, lam(T, g)).kappa(from_components(T, [(separating_curve(T, (2, 3)), 2)])) == k


def test_kappa_misses_monotone():
    rng = random.Random(21)
    T = new_surface(0, 6)
    cu = Cut(T, lam(T, separating_curve(T, (0, 1, 2))))
    C = lam(T, separating_curve(T, (0, 1, 2)))
    checked = 0
    for _ in range(12):
        x, y = lam(T, random_curve(T, rng)), lam(T, random_curve(T, rng))
        for c, _ in boundary_neighborhood(x, y).components():
            z = lam(T, c)
            if misses(z, C) or misses(x, C):
                continue
            kx, kz = cu.kappa(x), cu.kappa(z)
            for i in set(kx) & set(kz):
                assert intersection_number(kx[i], kz[i]) == 0
                checked += 1
    assert checked > 0


def test_arc_boundary_curves_miss_arc():
    rng = random.Random(3)
    for g, p in [(1, 1), (0, 5), (1, 2)]:
        T = new_surface(g, p)
        for _ in range(6):
            a = random_arc(T, rng)
            cs = arc_boundary_curves(T, a)
            assert cs
            for c in cs:
                assert path_intersection(T, c, a) == 0
