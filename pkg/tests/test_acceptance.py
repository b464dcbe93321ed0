"""Acceptance suite: one pass/fail line per criterion.

Run under pytest (each criterion is a test and prints its line) or as a
script, ``python tests/test_acceptance.py``, which prints all seven.
"""
import math
import random
import sys
import time

import pytest

from isofill.cat0 import (ThickFailure, check_bounded, check_thick, grid_boundary_loop,
                          grid_complex, planar_oracle, quadratic_fill, suspension_complex)
from isofill.complex_core import CombLoop, count_triangles, validate_filling
from isofill.filler_search import certify_infeasible_within, minimal_fill
from isofill.hex_certifier import build_square_loop, certify
from isofill.surface import (boundary_neighborhood, dehn_twist, flip, flip_laminations,
                             from_components, intersection_number, misses, new_surface,
                             random_arc, random_curve)
from isofill.surface.complexes import SurfaceComplex
from isofill.tightener import (cap_square, check_annulus, random_loop, random_square,
                               tighten_loop)

# minimal filling sizes of (p, 0, q, k) on the suspension, pinned by exhaustive search
SUSPENSION_MINIMA = {1: 2, 2: 4, 3: 6, 4: 8, 5: 10}


def _lam(T, *paths):
    return from_components(T, [(p, 1) for p in paths])


def crit1():
    counts, n = {}, 0
    for g, p in [(0, 5), (0, 6), (1, 2)]:
        T = new_surface(g, p)
        K = SurfaceComplex(T, "curve", window=1)
        rng = random.Random(1000 + 10 * g + p)
        for _ in range(40):
            c = random_square(T, rng)
            P, f = cap_square(c)
            if not validate_filling(P, f, CombLoop([x.weights for x in c]), K):
                return False, f"invalid cap on S_{g},{p}"
            t = count_triangles(P)
            if t not in (2, 4):
                return False, f"{t} triangles on S_{g},{p}"
            counts[t] = counts.get(t, 0) + 1
            n += 1
    return n >= 100, f"{n} squares, triangle counts {dict(sorted(counts.items()))}"


def crit2():
    T = new_surface(0, 6)
    status, n, worst = {}, 0, 0
    for length in (5, 6):
        rng = random.Random(2000 + length)
        for _ in range(50):
            res = tighten_loop(random_loop(T, length, rng))
            ok = (res.tightenings <= length and res.verified
                  and res.annulus.size <= 2 * length and check_annulus(res))
            if not ok:
                return False, f"loop {n} failed ({res.status})"
            status[res.status] = status.get(res.status, 0) + 1
            worst = max(worst, res.annulus.size)
            n += 1
    return n >= 100, f"{n} loops, outcomes {status}, largest annulus {worst}"


def crit3():
    K = suspension_complex(6).complex
    got = []
    for k in range(1, 6):
        loop = CombLoop(["p", 0, "q", k])
        r = minimal_fill(loop, K, 2 * k + 2)
        if not (r.found and r.exact):
            return False, f"no exact fill for k={k}"
        cert = certify_infeasible_within(loop, K, r.count - 1)
        if not cert.replay():
            return False, f"certificate for k={k} does not replay"
        got.append(r.count)
    ok = got == [SUSPENSION_MINIMA[k] for k in range(1, 6)] and \
        all(a < b for a, b in zip(got, got[1:]))
    return ok, f"minimal sizes k=1..5: {got}"


def crit4():
    K = grid_complex(4)
    loop = grid_boundary_loop(4)
    thick = check_thick(K)
    bounded = check_bounded(K, thick.eps / 2)
    P, f, rep = quadratic_fill(K, planar_oracle(K), loop, thick, bounded)
    l = len(loop)
    N = math.ceil(2 * rep.lK / thick.eps)
    bound = (2 * bounded.D * l / thick.eps + 1) * N + l + N
    ok = (l == 16 and rep.N == N and bool(validate_filling(P, f, loop, K.complex, "bijective"))
          and count_triangles(P) <= bound and rep.check()
          and all(c == rep.n[i] + rep.n[i + 1] - 1 for i, c in enumerate(rep.cell_counts)))
    return ok, f"{count_triangles(P)} triangles <= {float(bound):.0f}, N = {N}"


def crit5():
    failed = []
    for M in (3, 4, 5):
        K = suspension_complex(M)
        check_bounded(K, 1)
        try:
            check_thick(K)
        except ThickFailure as exc:
            failed.append((M, exc.witness is not None))
    ok = [m for m, w in failed if w] == [3, 4, 5]
    return ok, f"thick fails with witness for M in {[m for m, _ in failed]}, bounded ok"


def crit6():
    parts = []
    for k in (0, 1):
        s = build_square_loop(0, 6, k)
        for window in (2, 3, 4):
            res = minimal_fill(s.loop, s.oracle(window), 8)
            if not res.found:
                return False, f"no filling for k={k} window={window}"
            cert = certify(res.disc, res.fmap, s)
            tri = count_triangles(res.disc)
            ok = (cert.holds and tri >= math.ceil(cert.certified / 3)
                  and cert.length <= cert.edges <= 3 * cert.triangles)
            if not ok:
                return False, f"certificate fails for k={k} window={window}"
            parts.append(f"k={k}/w={window}:{tri}t,L={cert.certified}")
    return True, " ".join(parts)


def crit7():
    rng = random.Random(7)
    flips = 0
    while flips < 10 ** 4:
        g, p = rng.choice([(0, 5), (1, 2), (0, 6), (1, 1)])
        T = new_surface(g, p)
        for _ in range(6):
            e = rng.randrange(T.E)
            if T.flippable(e):
                T = flip(T, e)[0]
        L = _lam(T, random_curve(T, rng)) if rng.random() < 0.7 \
            else _lam(T, random_arc(T, rng, 1))
        for e in range(T.E):
            if not T.flippable(e):
                continue
            T2, (L2,) = flip_laminations(T, e, L)
            T3, (L3,) = flip_laminations(T2, e, L2)
            if T3 != T or L3.weights != L.weights:
                return False, "flip is not an involution"
            flips += 1
    twists = sym = bnd = 0
    for g, p in [(1, 1), (0, 5)]:
        T = new_surface(g, p)
        while twists < (4 if g else 8):
            a, b = _lam(T, random_curve(T, rng, 1)), _lam(T, random_curve(T, rng, 1))
            i = intersection_number(a, b)
            if i != intersection_number(b, a):
                return False, "intersection not symmetric"
            sym += 1
            if i == 0:
                continue
            for n in (1, 2, 3, 4):
                if intersection_number(dehn_twist(a, b, n), a) != n * i * i:
                    return False, f"twist identity fails at n={n}"
            twists += 1
    for g, p in [(0, 5), (1, 2), (0, 6)]:
        T = new_surface(g, p)
        for _ in range(15):
            a = _lam(T, random_curve(T, rng))
            b = _lam(T, random_arc(T, rng) if rng.random() < 0.5 else random_curve(T, rng))
            if intersection_number(a, b) != intersection_number(b, a):
                return False, "intersection not symmetric"
            sym += 1
        for _ in range(8):
            a, b = _lam(T, random_curve(T, rng)), _lam(T, random_curve(T, rng))
            d = boundary_neighborhood(a, b)
            if not (misses(d, a) and misses(d, b)):
                return False, "boundary neighbourhood cuts an input"
            bnd += 1
    return True, (f"{flips} flip triples, {sym} symmetric pairs, {twists} twist pairs "
                  f"(n=1..4), {bnd} neighbourhoods")


CRITERIA = [
    (1, "square capping", crit1),
    (2, "tightening procedure", crit2),
    (3, "suspension fillings grow", crit3),
    (4, "quadratic filler bound", crit4),
    (5, "thickness is necessary", crit5),
    (6, "hex certificates", crit6),
    (7, "surface core properties", crit7),
]


def report(num, name, fn):
    t = time.time()
    ok, detail = fn()
    line = f"criterion {num} {'PASS' if ok else 'FAIL'} {name}: {detail} ({time.time() - t:.1f}s)"
    return ok, line


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"criterion{n}" for n, _, _ in CRITERIA])
def test_criterion(num, name, fn, capsys):
    ok, line = report(num, name, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
