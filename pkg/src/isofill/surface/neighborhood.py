"""Boundary of a regular neighbourhood, and curves around an arc.

Draw the curves in minimal position; the crossings and the pieces of
curve between them form a 4-valent ribbon graph.  Each face walk of that
graph runs parallel to a boundary curve of the neighbourhood, so its dart
word, cyclically reduced, is that curve.  Faces that reduce to nothing or
to a puncture loop bound discs or once-punctured discs and are dropped.
"""
from __future__ import annotations

from .drawing import Drawing, crossings_along
from .lamination import Lamination, from_components
from .paths import Arc, Curve, reverse_word
from .moves import flip_path
from .triangulation import IdealTriangulation, flip, rot


def face_curves(T: IdealTriangulation, paths: list) -> list:
    """Distinct essential boundary curves of N(union of the curves)."""
    paths = list(dict.fromkeys(paths))
    if any(not isinstance(p, Curve) for p in paths):
        raise ValueError("regular neighbourhoods are taken of curves only")
    D = Drawing(T, paths)
    # half-edge = (vertex, sid, +1 towards chord exit | -1 towards entry)
    endpoint = {}
    partner = {}
    darts = {}
    found = []
    for st in D.strands:
        cr = crossings_along(D, st.sid)
        if not cr:
            found.append(st.path)
            continue
        n = len(st.w)
        verts = []
        for k, chord, other in cr:
            v = frozenset({(chord[0], chord[1]), (other[0], other[1])})
            verts.append((v, k))
            endpoint[(v, st.sid, 1)] = chord[3]
            endpoint[(v, st.sid, -1)] = chord[2]
        m = len(verts)
        for i in range(m):
            (v, k), (u, k2) = verts[i], verts[(i + 1) % m]
            if i + 1 < m:
                span = [st.w[j] for j in range(k, k2)]
            else:
                span = [st.w[j % n] for j in range(k, k2 + n)]
            a, b = (v, st.sid, 1), (u, st.sid, -1)
            partner[a], partner[b] = b, a
            darts[a] = span
            darts[b] = list(reverse_word(T, span))
    # ccw order of the four half-edges at each vertex
    around: dict = {}
    for h, p in endpoint.items():
        around.setdefault(h[0], []).append((p, h))
    nxt = {}
    for v, hs in around.items():
        hs.sort()
        for i, (_, h) in enumerate(hs):
            nxt[h] = hs[(i + 1) % len(hs)][1]
    seen = set()
    for h0 in sorted(partner, key=_hkey):
        if h0 in seen:
            continue
        word = []
        h = h0
        while h not in seen:
            seen.add(h)
            word.extend(darts[h])
            h = nxt[partner[h]]
        found.append(Curve.make(T, word))
    out = []
    for c in found:
        if c.is_trivial() or c.is_peripheral(T) or c in out:
            continue
        out.append(c)
    return out


def _hkey(h):
    v, sid, d = h
    return (sorted(v), sid, d)


def boundary_neighborhood(C1: Lamination, C2: Lamination) -> Lamination:
    """Essential curves of the boundary of N(C1 u C2), each once."""
    if C1.T != C2.T:
        raise ValueError("laminations live on different triangulations")
    if not (C1.is_multicurve() and C2.is_multicurve()):
        raise ValueError("boundary_neighborhood takes multicurves")
    T = C1.T
    curves = [c for c, _ in C1.components()] + [c for c, _ in C2.components()]
    return from_components(T, [(c, 1) for c in face_curves(T, curves)])


def arc_boundary_curves(T: IdealTriangulation, a: Arc) -> list:
    """Essential curves of the boundary of N(a u its end punctures).

    Flips make the arc an edge, where the curves are read off the spiral
    cycles of its end punctures; edge labels survive flips, so the curves
    come back by weight.
    """
    S, b = T, a
    path = []
    while not b.is_edge():
        best = None
        for e in range(S.E):
            if b.weights(S)[e] <= 0 or not S.flippable(e):
                continue
            S2, _, smap = flip(S, e)
            b2 = flip_path(S, e, S2, smap, b)
            score = sum(max(x, 0) for x in b2.weights(S2))
            if best is None or score < best[0]:
                best = (score, S2, b2, e)
        if best is None or best[0] >= sum(max(x, 0) for x in b.weights(S)):
            raise ValueError("no flip shortens the arc")
        path.append((S, best[3]))
        _, S, b, _ = best
    out = []
    for c in _edge_boundary(S, S.labels[b.window[0]]):
        R = S
        for S0, e in reversed(path):
            R1, _, smap = flip(R, e)
            c = flip_path(R, e, R1, smap, c)
            (c, _), = Lamination(S0, tuple(c.weights(R1))).components()
            R = S0
        if not c.is_trivial() and not c.is_peripheral(T) and c not in out:
            out.append(c)
    return out


def _edge_boundary(T: IdealTriangulation, e: int) -> list:
    """Boundary curves of N(edge e u its end punctures), as words."""
    cyc = {}
    for c in T.puncture_cycles():
        cyc[T.spiral_puncture(c[0])] = list(c)
    hits = []
    for P, c in cyc.items():
        for i, d in enumerate(c):
            if T.labels[d] == e:
                hits.append((P, i))
    (P, i), (Q, j) = hits
    if P != Q:
        cp, cq = cyc[P], cyc[Q]
        w = cp[i + 1:] + cp[:i] + cq[j + 1:] + cq[:j]
        words = [w]
    else:
        c = cyc[P]
        i, j = sorted((i, j))
        words = [c[i + 1:j], c[j + 1:] + c[:i]]
    out = []
    for w in words:
        if w:
            out.append(Curve.make(T, list(w)))
    return out


class FilledSubsurface:
    """F(C1, C2): a neighbourhood of C1 u C2 with its complementary discs
    and once-punctured discs added.  It is stored as its boundary
    multicurve together with the curves it was built from."""

    def __init__(self, C1: Lamination, C2: Lamination):
        self.T = C1.T
        self.boundary = boundary_neighborhood(C1, C2)
        self.cores = []
        for c, _ in C1.components() + C2.components():
            if c not in self.cores:
                self.cores.append(c)
        self._cut = None

    @property
    def is_whole(self) -> bool:
        return bool(self.cores) and self.boundary.is_empty()

    def _pieces(self, paths):
        from .cut import Cut
        if self._cut is None:
            self._cut = Cut(self.T, self.boundary)
        return [self._cut.locate(p) for p in paths]

    def contains_curve(self, x: Curve) -> bool:
        if not self.cores:
            return False
        if self.is_whole:
            return True
        rims = [c for c, _ in self.boundary.components()]
        if x in rims or x in self.cores:
            return True
        from .intersection import path_intersection
        if any(path_intersection(self.T, x, r) for r in rims):
            return False
        inner = [c for c in self.cores if c not in rims]
        if not inner:
            return False
        spots = self._pieces([x] + inner)
        return spots[0] in spots[1:]

    def contains(self, L: Lamination) -> bool:
        """Does F contain every component of L (up to isotopy)?"""
        return all(self.contains_curve(c) for c, _ in L.components())

    def __le__(self, other: "FilledSubsurface") -> bool:
        """Containment of filled subsurfaces: F' <= F iff F holds the
        curves F' was built from."""
        return all(other.contains_curve(c) for c in self.cores)


def filled_subsurface(C1: Lamination, C2: Lamination) -> FilledSubsurface:
    return FilledSubsurface(C1, C2)


def fills(C1: Lamination, C2: Lamination) -> bool:
    """True iff F(C1, C2) is the whole surface."""
    return FilledSubsurface(C1, C2).is_whole


def is_essential(L: Lamination) -> bool:
    """Non-empty, and no component bounds a disc or a once-punctured disc."""
    comps = L.components()
    return bool(comps) and not any(
        isinstance(c, Curve) and (c.is_trivial() or c.is_peripheral(L.T)) for c, _ in comps)


def components(L: Lamination) -> list:
    """One lamination per connected component (parallel copies apart)."""
    out = []
    for c, m in L.components():
        out.extend(from_components(L.T, [(c, 1)]) for _ in range(m))
    return out


def ribbon_faces(T: IdealTriangulation, paths: list) -> list:
    """Face walks of the ribbon graph of drawn curves and arcs.

    Vertices are the crossings and the punctures where arcs end; the
    faces run parallel to the boundary of N(paths u their end punctures).
    Returns (curve, punctures visited) per face; a curve meeting nothing
    gives its two sides.
    """
    paths = list(dict.fromkeys(paths))
    D = Drawing(T, paths)
    glue = T.glue
    partner, darts, endpoint = {}, {}, {}
    ends: dict = {}          # puncture -> [(order key, half-edge, corner)]
    faces = []
    corner_index = _corner_cycles(T)

    def piece(a, b, span):
        partner[a], partner[b] = b, a
        darts[a] = span
        darts[b] = list(reverse_word(T, span))

    for st in D.strands:
        cr = crossings_along(D, st.sid)
        n = len(st.w)
        verts = []
        for k, chord, other in cr:
            v = frozenset({(chord[0], chord[1]), (other[0], other[1])})
            verts.append((v, k))
            endpoint[(v, st.sid, 1)] = chord[3]
            endpoint[(v, st.sid, -1)] = chord[2]
        if st.cyclic:
            if not verts:
                c = st.path
                faces += [(c, []), (c, [])]
                continue
            m = len(verts)
            for i in range(m):
                (v, k), (u, k2) = verts[i], verts[(i + 1) % m]
                span = [st.w[j % n] for j in range(k, k2 if i + 1 < m else k2 + n)]
                piece((v, st.sid, 1), (u, st.sid, -1), span)
            continue
        hs, he = ("end", st.sid, 0), ("end", st.sid, 1)
        for h, c, far in ((hs, st.start_corner, _chord(D, st.sid, 0)[3]),
                          (he, st.end_corner, _chord(D, st.sid, n)[2])):
            t, k = divmod(c, 3)
            P = T.corner_puncture[c]
            angle = ((far[0] - k - 1) % 3, far[1])
            ends.setdefault(P, []).append(((corner_index[c], angle), h, c))
        if not verts:
            piece(hs, he, list(st.w))
            continue
        piece(hs, (verts[0][0], st.sid, -1), list(st.w[:verts[0][1]]))
        for i in range(len(verts) - 1):
            (v, k), (u, k2) = verts[i], verts[i + 1]
            piece((v, st.sid, 1), (u, st.sid, -1), list(st.w[k:k2]))
        v, k = verts[-1]
        piece((v, st.sid, 1), he, list(st.w[k:]))
    nxt, sweep, where = {}, {}, {}
    around: dict = {}
    for h, p in endpoint.items():
        around.setdefault(h[0], []).append((p, h))
    for hs in around.values():
        hs.sort()
        for i, (_, h) in enumerate(hs):
            nxt[h] = hs[(i + 1) % len(hs)][1]
    for P, es in ends.items():
        es.sort()
        for i, (key, h, c) in enumerate(es):
            key2, h2, c2 = es[(i + 1) % len(es)]
            nxt[h] = h2
            where[h] = P
            sweep[h] = _sweep(glue, c, c2, key2 > key)
    seen = set()
    for h0 in sorted(partner, key=repr):
        if h0 in seen:
            continue
        word, visits = [], []
        h = h0
        while h not in seen:
            seen.add(h)
            word.extend(darts[h])
            a = partner[h]
            if a in where:
                word.extend(sweep[a])
                visits.append(where[a])
            h = nxt[a]
        faces.append((Curve.make(T, word), visits))
    return faces


def _chord(D, sid, k):
    for ch in D.chords.values():
        for c in ch:
            if c[0] == sid and c[1] == k:
                return c
    raise KeyError((sid, k))


def _corner_cycles(T) -> dict:
    """Position of each corner 3t+k in the ccw order around its puncture."""
    index = {}
    for c0 in range(3 * T.F):
        if c0 in index:
            continue
        c, i = c0, 0
        while c not in index:
            index[c] = i
            i += 1
            g = T.glue[c]
            c = 3 * (g // 3) + (g % 3 - 1) % 3
    return index


def _sweep(glue, c1, c2, inside: bool) -> list:
    """Darts turning ccw around a puncture from corner c1 to corner c2;
    nothing when c2 comes later within the same corner."""
    if c1 == c2 and inside:
        return []
    out = []
    c = c1
    while True:
        out.append(c)
        g = glue[c]
        c = 3 * (g // 3) + (g % 3 - 1) % 3
        if c == c2:
            return out
