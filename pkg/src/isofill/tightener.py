"""Tightening loops of multicurves in the curve complex.

A loop (C_0, ..., C_{n-1}) of multicurves has C_i missing C_{i+1}.  It is
tight at j when C_j is exactly the essential boundary of a regular
neighbourhood of C_{j-1} u C_{j+1}; tightening at j replaces C_j by that
boundary.  Sweeping j = 1, 2, ..., n either makes the loop tight or runs
into a shortcut, and following one component of each C_i through the
sweep homotopes the loop of curves across at most two triangles per
tightening.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .complex_core import (AdjacencyOracle, CombLoop, SimplicialFillingMap,
                           TriangulatedDisc, sort_key, validate_filling)
from .surface import (Arc, Curve, Lamination, arc_boundary_curves, boundary_neighborhood,
                      face_curves, from_path, intersection_number)
from .surface.complexes import SurfaceComplex
from .surface.neighborhood import ribbon_faces


class LoopError(ValueError):
    pass


def parts(C: Lamination) -> list:
    """Components of a multicurve as laminations, lowest weights first."""
    out = {from_path(C.T, c).weights: from_path(C.T, c) for c, _ in C.components()}
    return [out[k] for k in sorted(out)]


def _misses_or_equal(a: Lamination, b: Lamination) -> bool:
    return a == b or intersection_number(a, b) == 0


def _support(C: Lamination) -> Lamination:
    """C with every multiplicity set to one."""
    comps = parts(C)
    w = [0] * C.T.E
    for p in comps:
        for e, x in enumerate(p.weights):
            w[e] += x
    return Lamination(C.T, tuple(w))


@dataclass(frozen=True)
class MultiCurveLoop:
    curves: tuple

    def __init__(self, curves):
        curves = tuple(_support(C) for C in curves)
        object.__setattr__(self, "curves", curves)
        if not curves:
            raise LoopError("empty loop")
        T = curves[0].T
        for i, C in enumerate(curves):
            if C.T != T:
                raise LoopError("curves live on different triangulations")
            if C.is_empty() or not C.is_multicurve():
                raise LoopError(f"entry {i} is not a multicurve")
            for c, _ in C.components():
                if c.is_trivial() or c.is_peripheral(T):
                    raise LoopError(f"entry {i} has an inessential component")
        n = len(curves)
        for i in range(n):
            if n > 1 and intersection_number(curves[i], curves[(i + 1) % n]):
                raise LoopError(f"entries {i} and {(i + 1) % n} cut")

    @property
    def T(self):
        return self.curves[0].T

    def __len__(self):
        return len(self.curves)

    def __getitem__(self, j):
        return self.curves[j % len(self.curves)]

    def replace(self, j: int, C: Lamination) -> "MultiCurveLoop":
        cs = list(self.curves)
        cs[j % len(cs)] = C
        return MultiCurveLoop(cs)


@dataclass(frozen=True)
class Shortcut:
    variant: str          # "dist2", "dist3" or "bridge"
    j: int
    witness: tuple        # curves, each a single-component lamination

    def verify(self, loop: MultiCurveLoop) -> bool:
        n, j, w = len(loop), self.j, self.witness
        if self.variant == "dist2":
            a, b = w
            return (a in parts(loop[j]) and b in parts(loop[j + 2])
                    and _misses_or_equal(a, b))
        if self.variant == "dist3":
            a, b = w[0], w[-1]
            if n < 6 or a not in parts(loop[j]) or b not in parts(loop[j + 3]):
                return False
            if len(w) == 2:
                return _misses_or_equal(a, b)
            mid = w[1]
            return _misses_or_equal(a, mid) and _misses_or_equal(mid, b)
        if self.variant == "bridge":
            g, others = w[0], w[1:]
            if [o in parts(loop[j + d]) for o, d in zip(others, (-1, 1, 2))] != [True] * 3:
                return False
            return all(g != o and intersection_number(g, o) == 0 for o in others)
        return False


def _common_curves(T, paths) -> list:
    """Essential boundary curves of N(paths): each misses every path."""
    return sorted((from_path(T, c) for c in face_curves(T, paths)), key=lambda L: L.weights)


def find_shortcut(loop: MultiCurveLoop) -> Optional[Shortcut]:
    """A shortcut of the loop, or None.

    d < 2 means equal or disjoint.  d < 3 means some curve misses both,
    which holds exactly when the neighbourhood of the pair has an
    essential boundary curve, so the search is exact.  A bridge is a
    curve disjoint from, and distinct from, three components; a boundary
    curve of their neighbourhood is tried first, then the edge curves.
    """
    n = len(loop)
    if n < 5:
        raise LoopError("shortcuts are defined for loops of length >= 5")
    T = loop.T
    for j in range(n):
        for a in parts(loop[j]):
            for b in parts(loop[j + 2]):
                if _misses_or_equal(a, b):
                    return Shortcut("dist2", j, (a, b))
    if n >= 6:
        for j in range(n):
            for a in parts(loop[j]):
                for b in parts(loop[j + 3]):
                    if _misses_or_equal(a, b):
                        return Shortcut("dist3", j, (a, b))
                    pa, pb = a.components()[0][0], b.components()[0][0]
                    mids = _common_curves(T, [pa, pb])
                    if mids:
                        return Shortcut("dist3", j, (a, mids[0], b))
    pool = None
    for j in range(n):
        for x in parts(loop[j - 1]):
            for y in parts(loop[j + 1]):
                for z in parts(loop[j + 2]):
                    three = (x, y, z)
                    paths = list(dict.fromkeys(p.components()[0][0] for p in three))
                    for g in _common_curves(T, paths):
                        if g not in three:
                            return Shortcut("bridge", j, (g,) + three)
                    if pool is None:
                        pool = SurfaceComplex(T, "curve", window=1).vertices()
                    for v in pool:
                        g = Lamination(T, v)
                        if g not in three and all(intersection_number(g, o) == 0
                                                  for o in three):
                            return Shortcut("bridge", j, (g,) + three)
    return None


def is_tight_at(loop: MultiCurveLoop, j: int) -> bool:
    return loop[j] == boundary_neighborhood(loop[j - 1], loop[j + 1])


def tighten_at(loop: MultiCurveLoop, j: int) -> MultiCurveLoop:
    B = boundary_neighborhood(loop[j - 1], loop[j + 1])
    if B.is_empty():
        raise LoopError(f"no essential boundary at index {j % len(loop)}")
    if loop[j] == B:
        return loop
    return loop.replace(j, B)


# homotopy annuli --------------------------------------------------------------

@dataclass(frozen=True)
class HomotopyAnnulus:
    """Triangles between an outer loop and an inner loop of vertices.

    Local ids are integers: ``outer`` and ``inner`` list the local ids of
    the two boundary loops in order and ``images`` gives each id's vertex.
    """

    triangles: tuple
    outer: tuple
    inner: tuple
    images: dict = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.triangles)

    def image_triangles(self) -> list:
        return [tuple(self.images[v] for v in t) for t in self.triangles]

    def inner_loop(self) -> tuple:
        return tuple(self.images[v] for v in self.inner)

    def outer_loop(self) -> tuple:
        return tuple(self.images[v] for v in self.outer)

    def glue(self, P: TriangulatedDisc, f: SimplicialFillingMap):
        """Glue a filling of the inner loop onto the annulus; the result
        fills the outer loop.  P's boundary, read in order, must map onto
        the inner loop (up to rotation and reversal)."""
        inner = list(self.inner)
        bd = [f(v) for v in P.boundary]
        want = [self.images[v] for v in inner]
        m = len(inner)
        match = None
        if len(bd) == m:
            for order in (inner, inner[::-1]):
                imgs = [self.images[v] for v in order]
                for r in range(m):
                    if all(bd[i] == imgs[(i + r) % m] for i in range(m)):
                        match = {P.boundary[i]: order[(i + r) % m] for i in range(m)}
                        break
                if match:
                    break
        if match is None:
            raise LoopError(f"filling boundary {bd} is not the inner loop {want}")
        top = max(self.images, default=-1) + 1
        rename = dict(match)
        for v in sorted(P.local_vertices(), key=sort_key):
            if v not in rename:
                rename[v] = top
                top += 1
        tris = list(self.triangles) + [tuple(rename[v] for v in t) for t in P.triangles]
        images = dict(self.images)
        for v, w in rename.items():
            images[w] = f(v)
        return TriangulatedDisc(tris, self.outer), SimplicialFillingMap(images)


class Cone(AdjacencyOracle):
    """A complex with one extra vertex, ``apex``, joined to everything."""

    apex = ("apex",)

    def __init__(self, base: AdjacencyOracle):
        self.base = base

    def are_adjacent(self, u, v) -> bool:
        if u == v:
            return False
        if self.apex in (u, v):
            return True
        return self.base.are_adjacent(u, v)


def cone_filling(loop: tuple):
    """The fan from Cone.apex over a loop of vertices."""
    n = len(loop)
    tris = [(i, (i + 1) % n, n) for i in range(n)]
    images = {i: v for i, v in enumerate(loop)}
    images[n] = Cone.apex
    return TriangulatedDisc(tris, list(range(n))), SimplicialFillingMap(images)


class _Annulus:
    def __init__(self, loop):
        self.images = {i: v for i, v in enumerate(loop)}
        self.outer = tuple(range(len(loop)))
        self.cur = list(self.outer)
        self.tris = []

    def new(self, image) -> int:
        k = len(self.images)
        self.images[k] = image
        return k

    def move(self, j: int, image):
        """Homotope the vertex at j across two triangles to ``image``."""
        n = len(self.cur)
        a, b, c = self.cur[(j - 1) % n], self.cur[j], self.cur[(j + 1) % n]
        if self.images[b] == image:
            return
        w = self.new(image)
        self.tris += [(a, b, w), (b, c, w)]
        self.cur[j] = w

    def done(self) -> HomotopyAnnulus:
        return HomotopyAnnulus(tuple(self.tris), self.outer, tuple(self.cur), self.images)


# the procedure --------------------------------------------------------------------

@dataclass(frozen=True)
class TightenResult:
    status: str                   # "tight", "shortcut" or "unresolved"
    loop: MultiCurveLoop
    shortcut: Optional[Shortcut]
    annulus: HomotopyAnnulus
    tightenings: int
    start: tuple                  # the loop of curves the annulus starts from
    log: tuple = ()

    @property
    def verified(self) -> bool:
        if self.status == "tight":
            return all(is_tight_at(self.loop, j) for j in range(len(self.loop)))
        if self.status == "shortcut":
            return self.shortcut.verify(self.loop)
        return False


def tighten_loop(loop: MultiCurveLoop) -> TightenResult:
    """Sweep j = 1, ..., n (mod n), tightening where the loop is not
    tight and looking for shortcuts after each tightening and at the end.

    The annulus follows the lowest component of each C_i; when a shortcut
    turns up, the indices it uses switch to the witness components.
    """
    n = len(loop)
    if n < 5:
        raise LoopError("tightening needs a loop of length >= 5")
    start = tuple(parts(C)[0].weights for C in loop.curves)
    A = _Annulus(start)
    calls = 0
    log = []
    cur = loop
    sc = None
    for step in range(1, n + 1):
        j = step % n
        if is_tight_at(cur, j):
            continue
        nxt = tighten_at(cur, j)
        calls += 1
        if calls > n:
            raise LoopError("more than n tightenings")  # impossible when no shortcut appears
        for d in (-1, 1):
            if intersection_number(nxt[j], nxt[j + d]):
                raise LoopError(f"tightening broke the loop at index {j}")
        cur = nxt
        log.append(j)
        sc = find_shortcut(cur)
        if sc is not None:
            break
    if sc is None:
        # a tight loop must also be free of shortcuts
        sc = find_shortcut(cur)
    # each index moves at most once: to its witness component if the
    # shortcut uses it, else to its lowest component
    wit = dict(_witness_slots(sc, n)) if sc is not None else {}
    for j in log:
        A.move(j, wit.pop(j, parts(cur[j])[0]).weights)
    for j, comp in sorted(wit.items()):
        A.move(j, comp.weights)
    if sc is not None:
        status = "shortcut"
    else:
        status = "tight" if all(is_tight_at(cur, j) for j in range(n)) else "unresolved"
    return TightenResult(status, cur, sc, A.done(), calls, start, tuple(log))


def _witness_slots(sc: Shortcut, n: int) -> list:
    if sc.variant == "dist2":
        return [(sc.j % n, sc.witness[0]), ((sc.j + 2) % n, sc.witness[1])]
    if sc.variant == "dist3":
        return [(sc.j % n, sc.witness[0]), ((sc.j + 3) % n, sc.witness[-1])]
    return [((sc.j + d) % n, w) for d, w in zip((-1, 1, 2), sc.witness[1:])]


def check_annulus(res: TightenResult, oracle: AdjacencyOracle = None) -> bool:
    """Glue the cone over the inner loop onto the annulus and validate the
    disc against the starting loop of curves."""
    T = res.loop.T
    K = Cone(oracle or SurfaceComplex(T, "curve", window=1))
    P, f = cone_filling(res.annulus.inner_loop())
    D, g = res.annulus.glue(P, f)
    return bool(validate_filling(D, g, CombLoop(res.start), K))


# squares --------------------------------------------------------------------------

def cap_square(c) -> tuple:
    """A filling of a 4-loop of curves with 2 or 4 triangles."""
    c = [x if isinstance(x, Lamination) else Lamination(c[0].T, x) for x in c]
    if len(c) != 4:
        raise LoopError("cap_square takes four curves")
    for i in range(4):
        if not _misses_or_equal(c[i], c[(i + 1) % 4]):
            raise LoopError(f"entries {i} and {(i + 1) % 4} cut")
        comps = c[i].components()
        if len(comps) != 1 or not isinstance(comps[0][0], Curve) or comps[0][1] != 1:
            raise LoopError(f"entry {i} is not a curve")
    w = [x.weights for x in c]
    bd = [0, 1, 2, 3]
    if _misses_or_equal(c[0], c[2]):
        tris = [(0, 1, 2), (0, 2, 3)]
    elif _misses_or_equal(c[1], c[3]):
        tris = [(1, 2, 3), (1, 3, 0)]
    else:
        C = boundary_neighborhood(c[0], c[2])
        if C.is_empty():
            raise LoopError("no boundary curve; the diagonal pair fills S")
        g = parts(C)[0]
        if not (_misses_or_equal(g, c[1]) and _misses_or_equal(g, c[3])):
            raise LoopError("boundary curve cuts a side")  # would be a bug
        tris = [(0, 1, 4), (1, 2, 4), (2, 3, 4), (3, 0, 4)]
        w.append(g.weights)
    return TriangulatedDisc(tris, bd), SimplicialFillingMap(dict(enumerate(w)))


# arcs to curves -------------------------------------------------------------------

def _curve_off(T, paths) -> Lamination:
    """Lowest essential curve of S peripheral in the complement of the paths."""
    got = set()
    for c, _ in ribbon_faces(T, list(dict.fromkeys(paths))):
        if not c.is_trivial() and not c.is_peripheral(T):
            got.add(from_path(T, c))
    if not got:
        raise LoopError("no essential peripheral curve (needs xi(S) >= 2)")
    return min(got, key=lambda L: L.weights)


def push_to_curve_complex(vertices) -> tuple:
    """Push a loop of arcs and curves into the curve complex.

    Each arc v_i goes to a boundary curve c_i of N(v_i); between two arcs
    a curve c'_i peripheral in S - v_i - v_{i+1} is inserted.  Returns
    (loop of curves, annulus), the annulus having <= 3n triangles.
    """
    vs = [v if isinstance(v, Lamination) else None for v in vertices]
    if any(v is None for v in vs):
        raise LoopError("vertices must be laminations")
    T = vs[0].T
    n = len(vs)
    paths = []
    for v in vs:
        comps = v.components()
        if len(comps) != 1 or comps[0][1] != 1:
            raise LoopError("each vertex must be one arc or one curve")
        paths.append(comps[0][0])
    for i in range(n):
        if n > 1 and intersection_number(vs[i], vs[(i + 1) % n]) and vs[i] != vs[(i + 1) % n]:
            raise LoopError(f"entries {i} and {(i + 1) % n} cut")
    is_arc = [isinstance(p, Arc) for p in paths]
    A = _Annulus([v.weights for v in vs])
    c_id = []
    for i in range(n):
        if is_arc[i]:
            got = sorted((from_path(T, c) for c in arc_boundary_curves(T, paths[i])),
                         key=lambda L: L.weights)
            if not got:
                raise LoopError("no essential peripheral curve (needs xi(S) >= 2)")
            c_id.append(A.new(got[0].weights))
        else:
            c_id.append(i)
    inner = []
    for i in range(n):
        k = (i + 1) % n
        inner.append(c_id[i])
        if is_arc[i] and is_arc[k]:
            m = A.new(_curve_off(T, [paths[i], paths[k]]).weights)
            A.tris += [(i, k, m), (i, m, c_id[i]), (k, c_id[k], m)]
            inner.append(m)
        elif is_arc[i]:
            A.tris.append((i, k, c_id[i]))
        elif is_arc[k]:
            A.tris.append((i, k, c_id[k]))
    A.cur = inner
    return tuple(A.images[v] for v in inner), A.done()


# random loops -----------------------------------------------------------------------

def _curve_pool(T, cap: int = 16) -> list:
    """Edge curves and their single twists about each other, light first."""
    from .surface import basic_curves, dehn_twist
    base = [from_path(T, c) for c in basic_curves(T)]
    pool = {c.weights: c for c in base}
    for a in base:
        for b in base:
            if intersection_number(a, b):
                for k in (1, -1):
                    t = dehn_twist(a, b, k)
                    if sum(t.weights) <= cap:
                        pool.setdefault(t.weights, t)
    return sorted(pool.values(), key=lambda L: (sum(L.weights), L.weights))


def seed_loops(T, n: int, limit: int = 20) -> list:
    """Induced n-cycles of the disjointness graph of the edge curves:
    consecutive curves miss, all others cut."""
    cs = _curve_pool(T)
    m = len(cs)
    miss = [[i != j and intersection_number(cs[i], cs[j]) == 0 for j in range(m)]
            for i in range(m)]
    out = []

    def grow(path):
        if len(out) >= limit:
            return
        last = path[-1]
        if len(path) == n:
            if miss[last][path[0]]:
                out.append(tuple(cs[i] for i in path))
            return
        for k in range(path[0] + 1, m):
            if k in path or not miss[last][k]:
                continue
            # induced: k cuts every earlier vertex but its neighbours
            if any(miss[k][q] for q in path[:-1] if not (q == path[0] and len(path) == n - 1)):
                continue
            grow(path + [k])

    for s in range(m):
        grow([s])
    return out


def random_loop(T, n: int, rng, perturb: int = 3, cap: int = 30) -> MultiCurveLoop:
    """A seed loop with a few entries twisted about curves missing both
    neighbours, sometimes enlarged to a multicurve; weights stay <= cap."""
    from .surface import basic_curves, dehn_twist
    seeds = seed_loops(T, n)
    if not seeds:
        raise LoopError(f"no seed loop of length {n}")
    cur = list(rng.choice(seeds))
    pool = [from_path(T, c) for c in basic_curves(T)]
    for _ in range(perturb):
        j = rng.randrange(n)
        nb = (cur[j - 1], cur[(j + 1) % n])
        bs = [b for b in pool if all(intersection_number(b, x) == 0 for x in nb)
              and intersection_number(b, cur[j])]
        if not bs:
            continue
        new = dehn_twist(cur[j], rng.choice(bs), rng.choice((-1, 1)))
        if sum(new.weights) <= cap:
            cur[j] = new
    if rng.random() < 0.5:
        j = rng.randrange(n)
        three = [cur[j - 1], cur[j], cur[(j + 1) % n]]
        extra = [b for b in pool if all(intersection_number(b, x) == 0 for x in three)
                 and b not in parts(cur[j])]
        if extra:
            b = rng.choice(extra)
            cur[j] = Lamination(T, tuple(x + y for x, y in zip(cur[j].weights, b.weights)))
    return MultiCurveLoop(cur)


def random_square(T, rng, cap: int = 40) -> tuple:
    """A 4-loop of curves (c0, c1, c2, c3) with c0 cutting c2, c1 and c3
    missing both and cutting each other when the pool allows, then moved
    by a random twist (which keeps the square a square)."""
    from .surface import dehn_twist
    pool = _curve_pool(T)
    while True:
        c0, c2 = rng.sample(pool, 2)
        if not intersection_number(c0, c2):
            continue
        cand = [x for x in pool if x not in (c0, c2)
                and intersection_number(x, c0) == 0 and intersection_number(x, c2) == 0]
        cand += [x for x in parts(boundary_neighborhood(c0, c2)) if x not in cand]
        if not cand:
            continue
        c1 = rng.choice(cand)
        cutting = [x for x in cand if intersection_number(x, c1)]
        c3 = rng.choice(cutting) if cutting and rng.random() < 0.7 else rng.choice(cand)
        sq = (c0, c1, c2, c3)
        b, k = rng.choice(pool), rng.choice((-1, 1))
        moved = tuple(dehn_twist(c, b, k) for c in sq)
        if all(sum(c.weights) <= cap for c in moved):
            sq = moved
        return sq
