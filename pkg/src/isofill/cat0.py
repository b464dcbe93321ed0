"""Quadratic fillings in planar CAT(0) flag complexes.

Everything is exact.  Points are pairs of Fractions, lengths are carried
as squared lengths, and a time along the geodesic c_i is stored as the
fraction lam of the segment from c(0) to c(t_i).  Since
R_i * t^i_j = t^{i+1}_{n(i+1)} * lam^i_j, comparing R_i t^i_j with
t^{i+1}_k is the same as comparing lam^i_j with lam^{i+1}_k, so the merge
order never needs a square root.

A point x lies in N(v) (closed barycentric star of v) iff v is a vertex of
the carrier of x and v has the largest barycentric coordinate there.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .complex_core import (CombLoop, FiniteFlagComplex, SimplicialFillingMap,
                           TriangulatedDisc, collapse_cycle, sort_key, validate_loop)

Point = tuple


class ThickFailure(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class ClaimFailure(RuntimeError):
    """An adjacency the sweep relies on is missing in K."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def _d2(a, b):
    d = _sub(a, b)
    return _dot(d, d)


def sqrt_floor(q: Fraction, den: int = 10 ** 9) -> Fraction:
    """Largest multiple of 1/den not exceeding sqrt(q); exact if q is a square."""
    q = Fraction(q)
    r = _exact_sqrt(q)
    if r is not None:
        return r
    return Fraction(math.isqrt(q.numerator * den * den // q.denominator), den)


def sqrt_ceil(q: Fraction, den: int = 10 ** 9) -> Fraction:
    q = Fraction(q)
    r = _exact_sqrt(q)
    if r is not None:
        return r
    lo = sqrt_floor(q, den)
    return lo + Fraction(1, den)


def _exact_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        raise ValueError("negative")
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


@dataclass(frozen=True)
class EuclideanShape:
    """Isometry type of a simplex, stored as squared edge lengths.

    For a triangle (a, b, c) the lengths are (|ab|^2, |bc|^2, |ca|^2).
    """

    dim: int
    sq_lengths: tuple

    def __post_init__(self):
        if any(Fraction(x) <= 0 for x in self.sq_lengths):
            raise ValueError("edge lengths must be positive")
        if self.dim == 2 and self.area16sq() <= 0:
            raise ValueError("degenerate triangle")

    def area16sq(self) -> Fraction:
        # 16 * area^2, from squared sides (Heron / Cayley-Menger)
        x, y, z = (Fraction(s) for s in self.sq_lengths)
        return 2 * (x * y + y * z + z * x) - (x * x + y * y + z * z)

    def thickness_sq(self) -> Fraction:
        """Squared distance from N(v) to the opposite face, minimized over v.

        In a triangle the closest point of N(v) to the far side is the
        barycentre, at height h_v / 3.
        """
        if self.dim == 1:
            return Fraction(self.sq_lengths[0]) / 4
        a16 = self.area16sq()
        # h^2 = 4 A^2 / base^2 = a16 / (4 base^2); (h/3)^2 = a16 / (36 base^2)
        return min(a16 / (36 * Fraction(b)) for b in self.sq_lengths)


@dataclass
class MetricFlagComplex:
    """A finite flag complex with a planar embedding.

    ``extension`` optionally builds the same complex with a larger
    truncation parameter; it tells the validators that this object is a
    window onto an infinite family.
    """

    complex: FiniteFlagComplex
    coords: dict
    triangles: list = field(default_factory=list)
    name: str = ""
    extension: Optional[Callable] = None
    scale: int = 0

    def __post_init__(self):
        if not self.triangles:
            self.triangles = [tuple(t) for t in self.complex.triangles()]
        for t in self.triangles:
            a, b, c = (self.coords[v] for v in t)
            if _cross(_sub(b, a), _sub(c, a)) == 0:
                raise ValueError(f"triangle {t} is degenerate in the embedding")

    def shape(self, t) -> EuclideanShape:
        a, b, c = (self.coords[v] for v in t)
        return EuclideanShape(2, (_d2(a, b), _d2(b, c), _d2(c, a)))

    def edge_sq(self, u, v) -> Fraction:
        return _d2(self.coords[u], self.coords[v])

    def shape_table(self) -> list:
        """Distinct shapes, up to relabelling of the vertices."""
        seen = {}
        for t in self.triangles:
            s = self.shape(t)
            seen.setdefault(tuple(sorted(s.sq_lengths)), s)
        return [seen[k] for k in sorted(seen)]


# ---- validators -------------------------------------------------------

@dataclass(frozen=True)
class BoundedShapes:
    D: Fraction          # max edge length (rounded up if irrational)
    D_sq: Fraction
    delta: Fraction
    n: int               # intervals per edge at mesh delta


def check_bounded(K: MetricFlagComplex, delta) -> BoundedShapes:
    """Max edge length D; each edge splits into ceil(D/delta) pieces."""
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    D2 = max(K.edge_sq(u, v) for u, v in K.complex.edges())
    D = sqrt_ceil(D2)
    n = 1
    while (n * delta) ** 2 < D2:
        n += 1
    return BoundedShapes(D, D2, delta, n)


@dataclass(frozen=True)
class ThickShapes:
    eps: Fraction        # rational, <= the exact thickness
    eps_sq: Fraction     # exact squared thickness
    witness: tuple = ()


def _seg_point_d2(p, a, b) -> Fraction:
    ab = _sub(b, a)
    L = _dot(ab, ab)
    s = _dot(_sub(p, a), ab) / L if L else Fraction(0)
    s = min(max(s, Fraction(0)), Fraction(1))
    q = (a[0] + s * ab[0], a[1] + s * ab[1])
    return _d2(p, q)


def _segments_cross(a, b, c, d) -> bool:
    d1 = _cross(_sub(b, a), _sub(c, a))
    d2 = _cross(_sub(b, a), _sub(d, a))
    d3 = _cross(_sub(d, c), _sub(a, c))
    d4 = _cross(_sub(d, c), _sub(b, c))
    if ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0 and
            (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0):
        return True
    return False


def _seg_seg_d2(a, b, c, d) -> Fraction:
    if _segments_cross(a, b, c, d):
        return Fraction(0)
    return min(_seg_point_d2(a, c, d), _seg_point_d2(b, c, d),
               _seg_point_d2(c, a, b), _seg_point_d2(d, a, b))


def _star_quads(K: MetricFlagComplex, v):
    pv = K.coords[v]
    for t in K.triangles:
        if v in t:
            a, b = (K.coords[w] for w in t if w != v)
            ma = ((pv[0] + a[0]) / 2, (pv[1] + a[1]) / 2)
            mb = ((pv[0] + b[0]) / 2, (pv[1] + b[1]) / 2)
            g = ((pv[0] + a[0] + b[0]) / 3, (pv[1] + a[1] + b[1]) / 3)
            yield (pv, ma, g, mb)


def embedded_thickness_sq(K: MetricFlagComplex, below=None):
    """min over v and edges e not at v of dist(N(v), e)^2, in the plane.

    With a convex support the planar distance is the CAT(0) distance, so
    this is the thickness of the embedded window itself.  With ``below``
    set, only values under it are searched for (None if there are none).
    """
    best, wit = below, ()
    for v in K.complex.vertices():
        quads = []
        for q in _star_quads(K, v):
            xs, ys = [p[0] for p in q], [p[1] for p in q]
            quads.append((q, min(xs), max(xs), min(ys), max(ys)))
        for u, w in K.complex.edges():
            if v in (u, w):
                continue
            c, d = K.coords[u], K.coords[w]
            for q, x0, x1, y0, y1 in quads:
                # cheap box test before the exact segment distances
                gx = max(min(c[0], d[0]) - x1, x0 - max(c[0], d[0]), 0)
                gy = max(min(c[1], d[1]) - y1, y0 - max(c[1], d[1]), 0)
                if best is not None and gx * gx + gy * gy >= best:
                    continue
                for k in range(4):
                    d2 = _seg_seg_d2(q[k], q[(k + 1) % 4], c, d)
                    if best is None or d2 < best:
                        best, wit = d2, (v, (u, w))
    return best, wit


def check_thick(K: MetricFlagComplex, scales: int = 3) -> ThickShapes:
    """Thickness constant via the barycentric subdivision of each shape.

    The per-shape value is min over vertices of h_v / 3; when the complex
    is embedded we also take the planar distance from each N(v) to every
    edge away from v and keep the smaller number.

    A finite window always has some positive thickness.  If ``K`` declares
    an ``extension`` (it is a window onto an infinite family) the
    per-shape thickness is recomputed on windows 2x, 4x, ... larger; when eps^2
    keeps falling by at least half at every doubling the family has no
    uniform constant and ThickFailure is raised with the thinnest simplex
    as witness.
    """
    eps2, wit = _window_thickness(K)
    if eps2 <= 0:
        raise ThickFailure("a simplex meets N(v) for a vertex v outside it", wit)
    if K.extension is not None and K.scale > 0:
        seq = [(K.scale, eps2, wit)]
        for k in range(1, scales + 1):
            big = K.extension(K.scale * 2 ** k)
            e2, w2 = _window_thickness(big, embedded=False)
            seq.append((big.scale, e2, w2))
        shrinking = all(b[1] * 2 <= a[1] for a, b in zip(seq, seq[1:]))
        if shrinking:
            raise ThickFailure(
                "thickness decays with the truncation: " +
                ", ".join(f"M={m}: eps^2={float(e):.3g}" for m, e, _ in seq),
                seq[-1][2])
    return ThickShapes(sqrt_floor(eps2), eps2, wit)


def _window_thickness(K: MetricFlagComplex, embedded: bool = True):
    best, wit = None, ()
    for t in K.triangles:
        e2 = K.shape(t).thickness_sq()
        if best is None or e2 < best:
            best, wit = e2, ("shape", t)
    if embedded and K.coords:
        e2, w = embedded_thickness_sq(K, below=best)
        if w and e2 < best:
            best, wit = e2, ("embedded",) + w
    return best, wit


# ---- planar geodesics ---------------------------------------------------

class PlanarOracle:
    """Geodesics of a convex planar complex are straight segments."""

    def __init__(self, K: MetricFlagComplex):
        self.K = K
        self._check_convex()
        self._edges = [(u, v, K.coords[u], K.coords[v]) for u, v in K.complex.edges()]

    def _check_convex(self):
        K = self.K
        count = {}
        for t in K.triangles:
            for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                key = frozenset((a, b))
                count[key] = count.get(key, 0) + 1
        bd = [tuple(e) for e, c in count.items() if c == 1]
        nb = {}
        for a, b in bd:
            nb.setdefault(a, []).append(b)
            nb.setdefault(b, []).append(a)
        if any(len(x) != 2 for x in nb.values()):
            raise ValueError("support is not a disc")
        start = min(nb, key=sort_key)
        cyc, prev, cur = [start], None, start
        while True:
            a, b = nb[cur]
            nxt = a if a != prev else b
            if nxt == start:
                break
            cyc.append(nxt)
            prev, cur = cur, nxt
        if len(cyc) != len(nb):
            raise ValueError("support has several boundary circles")
        pts = [K.coords[v] for v in cyc]
        n = len(pts)
        signs = set()
        for i in range(n):
            c = _cross(_sub(pts[(i + 1) % n], pts[i]), _sub(pts[(i + 2) % n], pts[(i + 1) % n]))
            if c != 0:
                signs.add(c > 0)
        if len(signs) > 1:
            raise ValueError("support is not convex")
        self.boundary_cycle = cyc

    def barycentric(self, x):
        """(triangle, coords) for some triangle containing x."""
        for t in self.K.triangles:
            a, b, c = (self.K.coords[v] for v in t)
            den = _cross(_sub(b, a), _sub(c, a))
            lb = _cross(_sub(x, a), _sub(c, a)) / den
            lc = _cross(_sub(b, a), _sub(x, a)) / den
            la = 1 - lb - lc
            if la >= 0 and lb >= 0 and lc >= 0:
                return t, (la, lb, lc)
        raise ValueError(f"point {x} is outside the complex")

    def carrier(self, x) -> dict:
        """Vertices of the minimal simplex containing x, with weights."""
        t, w = self.barycentric(x)
        return {v: c for v, c in zip(t, w) if c > 0}

    def in_N(self, x, v) -> bool:
        car = self.carrier(x)
        return v in car and car[v] == max(car.values())

    def length_sq(self, x, y) -> Fraction:
        return _d2(x, y)

    def point_at(self, x, y, lam):
        return (x[0] + lam * (y[0] - x[0]), x[1] + lam * (y[1] - x[1]))

    def breakpoints(self, x, y) -> list:
        """Segment fractions in (0, 1] where the carrier may change."""
        d = _sub(y, x)
        out = {Fraction(1)}
        if d == (0, 0):
            return [Fraction(1)]
        for _, _, a, b in self._edges:
            e = _sub(b, a)
            den = _cross(d, e)
            ax = _sub(a, x)
            if den != 0:
                lam = _cross(ax, e) / den
                mu = _cross(ax, d) / den
                if 0 <= mu <= 1 and 0 < lam <= 1:
                    out.add(lam)
            elif _cross(ax, d) == 0:
                dd = _dot(d, d)
                for p in (a, b):
                    lam = _dot(_sub(p, x), d) / dd
                    if 0 < lam <= 1:
                        out.add(lam)
        return sorted(out)


def planar_oracle(K: MetricFlagComplex) -> PlanarOracle:
    return PlanarOracle(K)


# ---- the sweep ----------------------------------------------------------

@dataclass
class SweepReport:
    eps: Fraction
    D: Fraction
    loop_length: int
    lK: Fraction                 # exact if rational, else an upper bound
    N: int
    n: list                      # n(i) for i = 0..N
    lam: list                    # segment fractions of each path
    d_sq: list                   # squared d_K(c(0), c(t_i))
    cell_counts: list
    collar_count: int
    total: int
    bound: Fraction
    events: list = field(default_factory=list, repr=False)

    def check(self):
        """The bookkeeping the proof promises, asserted exactly."""
        assert self.total <= self.bound, (self.total, self.bound)
        for i, c in enumerate(self.cell_counts):
            assert c == self.n[i] + self.n[i + 1] - 1, (i, c)
        eps2 = self.eps ** 2
        for i, lam in enumerate(self.lam):
            ni = self.n[i]
            for j in range(1, ni):
                gap = lam[j] - lam[j - 1]
                assert gap * gap * self.d_sq[i] >= eps2, (i, j)
            if ni >= 1:
                assert ((ni - 1) * self.eps) ** 2 <= self.d_sq[i] or ni == 1, (i, ni)
        assert self.collar_count <= self.loop_length + self.N
        return True


def _loop_points(K, loop, eps):
    """Points c(t_i), i = 0..N, spaced eps/2 by arc length."""
    vs = loop.vertices
    l = len(vs)
    half = eps / 2
    lens = []
    for a in range(l):
        L2 = K.edge_sq(vs[a], vs[(a + 1) % l])
        lens.append(_exact_sqrt(L2))
    pts = []   # (point, edge index a, fraction along edge)
    if all(x is not None for x in lens):
        lK = sum(lens)
        N = math.ceil(lK / half)
        cum = [Fraction(0)]
        for x in lens:
            cum.append(cum[-1] + x)
        a = 0
        for i in range(N + 1):
            t = min(i * half, lK)
            while a < l - 1 and t > cum[a + 1]:
                a += 1
            f = (t - cum[a]) / lens[a]
            pts.append((a, f))
        return pts, N, lK, True
    # irrational edge lengths: equal pieces of length <= eps/2 on each edge
    lK = Fraction(0)
    pts.append((0, Fraction(0)))
    for a in range(l):
        L2 = K.edge_sq(vs[a], vs[(a + 1) % l])
        lK += sqrt_ceil(L2)
        m = 1
        while (m * half) ** 2 < L2:
            m += 1
        for k in range(1, m + 1):
            pts.append((a, Fraction(k, m)))
    return pts, len(pts) - 1, lK, False


def _path(O: PlanarOracle, K, x0v, y):
    """The combinatorial path (v^i_j) and fractions lam^i_j along [c(0), y]."""
    x0 = K.coords[x0v]
    verts, lams = [x0v], [Fraction(0)]
    bps = O.breakpoints(x0, y)
    lam_prev = Fraction(0)
    while True:
        vprev = verts[-1]
        hit = None
        for b in bps:
            if b <= lam_prev:
                continue
            if vprev not in O.carrier(O.point_at(x0, y, b)):
                hit = b
                break
        if hit is None:
            cands = [v for v in O.carrier(y) if O.in_N(y, v)
                     and (v == vprev or K.complex.are_adjacent(v, vprev))]
            if not cands:
                raise ClaimFailure("final step has no vertex next to the path end",
                                   (vprev, y))
            verts.append(min(cands, key=sort_key))
            lams.append(Fraction(1))
            return verts, lams
        p = O.point_at(x0, y, hit)
        cands = [v for v in O.carrier(p) if O.in_N(p, v)]
        v = min(cands, key=sort_key)
        if not K.complex.are_adjacent(v, vprev):
            raise ClaimFailure("consecutive path vertices are not adjacent", (vprev, v, p))
        verts.append(v)
        lams.append(hit)
        lam_prev = hit


def _cell(i, pi, li, pj, lj, K, events):
    """Triangles of P(i) between paths i and i+1, as (j, k) index pairs."""
    ni, nj = len(pi) - 1, len(pj) - 1
    elems = [(li[j], 0, j) for j in range(ni + 1)] + [(lj[k], 1, k) for k in range(nj + 1)]
    elems.sort(reverse=True)
    edges = []
    for m in range(ni + nj - 1):
        lam, side, jm = elems[m]
        if side == 1:
            # largest j with lam^i_j <= lam^{i+1}_{j(m)}
            j = max(j for j in range(ni + 1) if li[j] <= lam)
            e = (j, jm)
        else:
            # largest k with lam^{i+1}_k < lam^i_{j(m)}
            k = max(k for k in range(nj + 1) if lj[k] < lam)
            e = (jm, k)
        a, b = pi[e[0]], pj[e[1]]
        if a != b and not K.complex.are_adjacent(a, b):
            raise ClaimFailure(f"sweep edge {e} in cell {i}: {a!r} and {b!r} not adjacent",
                               (i, m + 1, e, a, b))
        edges.append(e)
        events.append((i, m + 1, side, jm, e))
    tris = []
    for e, f in zip(edges, edges[1:]):
        dj, dk = e[0] - f[0], e[1] - f[1]
        if (dj, dk) == (1, 0):
            tris.append((("i", e[0]), ("i", f[0]), ("k", e[1])))
        elif (dj, dk) == (0, 1):
            tris.append((("i", e[0]), ("k", e[1]), ("k", f[1])))
        else:
            raise ClaimFailure(f"sweep edges {e}, {f} in cell {i} do not share one end",
                               (i, e, f))
    j, k = edges[-1]
    if j + k != 2:
        raise ClaimFailure(f"last sweep edge {edges[-1]} of cell {i} is not next to c(0)",
                           (i, edges[-1]))
    # the triangle at c(0); index 0 on either side is c(0) itself
    tris.append(tuple([("i", x) for x in range(j, -1, -1)] + [("k", x) for x in range(k, 0, -1)]))
    return tris


def quadratic_fill(K: MetricFlagComplex, oracle: PlanarOracle, loop: CombLoop,
                   thick: Optional[ThickShapes] = None,
                   bounded: Optional[BoundedShapes] = None):
    """Fill ``loop`` by sweeping geodesics from c(0); returns (P, f, report).

    The loop must start at a vertex (it always does here) and have no
    repeated consecutive vertices; those are collapsed first.
    """
    if not validate_loop(loop, K.complex):
        raise ValueError("not a combinatorial loop in K")
    thick = thick or check_thick(K)
    eps = thick.eps
    bounded = bounded or check_bounded(K, eps / 2)
    D = bounded.D
    loop = CombLoop(collapse_cycle(loop.vertices))
    vs = loop.vertices
    l = len(vs)
    if l < 3:
        imgs = list(vs) + [vs[-1]] * (3 - l)
        P = TriangulatedDisc([(0, 1, 2)], [0, 1, 2])
        return P, SimplicialFillingMap(dict(enumerate(imgs))), None
    pts, N, lK, _ = _loop_points(K, loop, eps)
    x0v = vs[0]
    paths, lams, dsq, edge_of = [], [], [], []
    for a, f in pts:
        p = K.coords[vs[a]]
        q = K.coords[vs[(a + 1) % l]]
        y = (p[0] + f * (q[0] - p[0]), p[1] + f * (q[1] - p[1]))
        pv, lv = _path(oracle, K, x0v, y)
        paths.append(pv)
        lams.append(lv)
        dsq.append(_d2(K.coords[x0v], y))
        edge_of.append((a, f))
    n = [len(p) - 1 for p in paths]

    def loc(i, j):
        return "o" if j == 0 else (i, j)

    tris, assign, events, cell_counts = [], {"o": x0v}, [], []
    for i in range(N + 1):
        for j in range(1, n[i] + 1):
            assign[(i, j)] = paths[i][j]
    for i in range(N):
        raw = _cell(i, paths[i], lams[i], paths[i + 1], lams[i + 1], K, events)
        cell_counts.append(len(raw))
        for t in raw:
            tris.append(tuple(loc(i, j) if side == "i" else loc(i + 1, j) for side, j in t))

    # collar between the end points (v^i_{n(i)}) and the original loop
    pos = []
    for i, (a, f) in enumerate(edge_of):
        w = paths[i][-1]
        if i == N:
            pos.append(l)          # back at c(0), position l == 0
        elif f == 0 or w == vs[a]:
            pos.append(a)
        else:
            pos.append(a + 1)
    inner = [loc(i, n[i]) for i in range(N + 1)]
    outer = ["o"] + [("u", a) for a in range(1, l)] + ["o"]
    for a in range(1, l):
        assign[("u", a)] = vs[a]
    x, y = 0, 0
    collar = []
    while not (x == N and y == l - 1):
        if y < l - 1 and (x == N or y == 0 or pos[x + 1] > y + 1):
            collar.append((inner[x], outer[y], outer[y + 1]))
            y += 1
        else:
            collar.append((inner[x], inner[x + 1], outer[y]))
            x += 1
    collar.append((inner[N], outer[l - 1], outer[l]))
    for t in collar:
        img = [assign[v] for v in t]
        for u in range(3):
            for w in range(u + 1, 3):
                if img[u] != img[w] and not K.complex.are_adjacent(img[u], img[w]):
                    raise ClaimFailure(f"collar triangle {t} is not a simplex", (t, img))
    tris += collar
    boundary = ["o"] + [("u", a) for a in range(1, l)]
    P = TriangulatedDisc(tris, boundary)
    f = SimplicialFillingMap(assign)
    bound = (2 * D * l / eps + 1) * N + l + N
    report = SweepReport(eps, D, l, lK, N, n, lams, dsq, cell_counts, len(collar),
                         len(tris), bound, events)
    return P, f, report


# ---- test complexes -----------------------------------------------------

def grid_complex(size: int = 4) -> MetricFlagComplex:
    """Unit right triangles on [0, size]^2, diagonals from (x, y) to (x+1, y+1)."""
    verts, edges, coords = [], [], {}

    def vid(x, y):
        return x * (size + 1) + y

    for x in range(size + 1):
        for y in range(size + 1):
            verts.append(vid(x, y))
            coords[vid(x, y)] = (Fraction(x), Fraction(y))
            if x < size:
                edges.append((vid(x, y), vid(x + 1, y)))
            if y < size:
                edges.append((vid(x, y), vid(x, y + 1)))
            if x < size and y < size:
                edges.append((vid(x, y), vid(x + 1, y + 1)))
    return MetricFlagComplex(FiniteFlagComplex(verts, edges), coords, name=f"grid{size}")


def grid_boundary_loop(size: int = 4) -> CombLoop:
    pts = ([(x, 0) for x in range(size)] + [(size, y) for y in range(size)] +
           [(x, size) for x in range(size, 0, -1)] + [(0, y) for y in range(size, 0, -1)])
    return CombLoop(x * (size + 1) + y for x, y in pts)


def suspension_complex(M: int) -> MetricFlagComplex:
    """Suspension of the line -M..M with apexes 'p' and 'q'.

    Embedding: line vertex n at (n, 0), p at (0, 1), q at (0, -1).  The
    support is a convex quadrilateral.  Edges from the apexes grow like
    |n| and the angle at p or q of triangle n shrinks like 1/n^2, so the
    shapes degenerate as the truncation grows.
    """
    if M < 1:
        raise ValueError("M must be at least 1")
    verts = ["p", "q"] + list(range(-M, M + 1))
    edges = []
    for n in range(-M, M):
        edges.append((n, n + 1))
    for n in range(-M, M + 1):
        edges += [("p", n), ("q", n)]
    coords = {"p": (Fraction(0), Fraction(1)), "q": (Fraction(0), Fraction(-1))}
    for n in range(-M, M + 1):
        coords[n] = (Fraction(n), Fraction(0))
    tris = [("p", n, n + 1) for n in range(-M, M)] + [("q", n, n + 1) for n in range(-M, M)]
    return MetricFlagComplex(FiniteFlagComplex(verts, edges), coords, tris,
                             name=f"suspension{M}", extension=suspension_complex, scale=M)
