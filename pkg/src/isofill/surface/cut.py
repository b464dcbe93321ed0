"""Cutting a punctured surface along a multicurve.

With the multicurve in normal position, each triangle splits into corner
regions, strips between parallel normal arcs, and one central region.
Turning every boundary circle into a puncture shrinks the normal arcs to
points: each central region becomes an ideal triangle, and each chain of
strips and corner regions between two central sides becomes one edge.
So the cut surface has as many triangles as the surface it came from.

A path disjoint from the multicurve crosses a cut edge exactly when it
leaves a central region, which gives its word in the cut surface.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .drawing import Drawing, crossings_along
from .lamination import Lamination, from_components, triangle_counts
from .paths import Arc, Curve
from .triangulation import IdealTriangulation


class CutError(ValueError):
    pass


@dataclass(eq=False)
class Subsurface:
    """One piece of a cut surface, boundary circles shown as punctures.

    ``slots[i]`` is the slot of the big surface whose central side became
    slot i here; ``kinds[q]`` is ("puncture", P) or ("boundary", None) for
    puncture q of the piece.
    """

    T: IdealTriangulation
    slots: list
    kinds: dict
    owner: "Cut" = field(repr=False, default=None)
    index: int = 0

    @property
    def chi(self) -> int:
        return self.T.chi

    @property
    def genus(self) -> int:
        return self.T.genus

    @property
    def boundaries(self) -> int:
        return sum(1 for k, _ in self.kinds.values() if k == "boundary")

    @property
    def punctures(self) -> frozenset:
        """Punctures of the big surface lying in this piece."""
        return frozenset(P for k, P in self.kinds.values() if k == "puncture")

    @property
    def xi(self) -> int:
        return self.T.xi

    def transfer(self, L: Lamination):
        """L (disjoint from the cutting curves) as a lamination here, or
        None when no component of L lies in this piece."""
        return self.owner.transfer(L).get(self.index)

    def kappa(self, L: Lamination) -> Lamination:
        return self.owner.kappa(L).get(self.index, Lamination(self.T, (0,) * self.T.E))

    def __repr__(self):
        return (f"Subsurface(genus={self.genus}, punctures={sorted(self.punctures)}, "
                f"boundaries={self.boundaries})")


class Cut:
    def __init__(self, T: IdealTriangulation, C: Lamination):
        if C.T != T:
            raise CutError("multicurve lives on another triangulation")
        if not C.is_multicurve():
            raise CutError("can only cut along a multicurve")
        curves = []
        for c, _ in C.components():
            if c.is_trivial() or c.is_peripheral(T):
                raise CutError("cutting curves must be essential")
            if c not in curves:
                curves.append(c)
        if not curves:
            raise CutError("empty multicurve")
        self.T = T
        self.curves = curves
        W = [0] * T.E
        for c in curves:
            for e, x in enumerate(c.weights(T)):
                W[e] += x
        self.W = W
        self.x = [tuple(W[T.labels[3 * t + s]] for s in range(3)) for t in range(T.F)]
        self.c = [triangle_counts(x)[0] for x in self.x]
        self._build()

    # segments ---------------------------------------------------------
    def seg(self, slot: int, j: int) -> tuple:
        """Edge segment j of a slot, counted from the slot's first corner."""
        e = self.T.labels[slot]
        if slot == self.T.primary[e]:
            return (e, j)
        return (e, self.W[e] - j)

    def central_index(self, slot: int) -> int:
        t, s = divmod(slot, 3)
        return self.c[t][(s - 1) % 3]

    def _build(self):
        T = self.T
        parent: dict = {}

        def find(a):
            parent.setdefault(a, a)
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for t in range(T.F):
            x, c = self.x[t], self.c[t]
            for k in range(3):
                for j in range(c[k]):
                    a = find(self.seg(3 * t + (k + 1) % 3, j))
                    b = find(self.seg(3 * t + k, x[k] - j))
                    parent[a] = b
        ends: dict = {}
        for slot in range(3 * T.F):
            r = find(self.seg(slot, self.central_index(slot)))
            ends.setdefault(r, []).append(slot)
        self._find = find
        self.class_slots = ends
        glue = [None] * (3 * T.F)
        for r, sl in ends.items():
            if len(sl) != 2:
                raise CutError("band does not join two central sides")
            a, b = sl
            glue[a], glue[b] = b, a
        # connected pieces of central triangles
        comp = [-1] * T.F
        pieces = []
        for t0 in range(T.F):
            if comp[t0] >= 0:
                continue
            stack, tris = [t0], []
            comp[t0] = len(pieces)
            while stack:
                t = stack.pop()
                tris.append(t)
                for s in range(3):
                    u = glue[3 * t + s] // 3
                    if comp[u] < 0:
                        comp[u] = len(pieces)
                        stack.append(u)
            pieces.append(sorted(tris))
        self.local = {}
        self.pieces = []
        for i, tris in enumerate(pieces):
            idx = {t: n for n, t in enumerate(tris)}
            for t in tris:
                for s in range(3):
                    self.local[3 * t + s] = (i, 3 * idx[t] + s)
            g = []
            labels = []
            lab: dict = {}
            slots = []
            for t in tris:
                for s in range(3):
                    a = 3 * t + s
                    b = glue[a]
                    g.append(3 * idx[b // 3] + b % 3)
                    key = min(a, b)
                    lab.setdefault(key, len(lab))
                    labels.append(lab[key])
                    slots.append(a)
            P = IdealTriangulation(tuple(g), tuple(labels))
            kinds = {}
            for n, t in enumerate(tris):
                for k in range(3):
                    q = P.corner_puncture[3 * n + k]
                    if self.c[t][k] > 0:
                        kind = ("boundary", None)
                    else:
                        kind = ("puncture", T.corner_puncture[3 * t + k])
                    if kinds.setdefault(q, kind) != kind:
                        raise CutError("inconsistent puncture classes")
            self.pieces.append(Subsurface(P, slots, kinds, self, i))

    # drawing-based transfer -------------------------------------------
    def _drawn(self, paths: list):
        D = Drawing(self.T, list(self.curves) + list(paths))
        nC = len(self.curves)
        cpos: dict = {}
        for (sid, k), q in D.pos.items():
            if sid < nC:
                cpos.setdefault(self.T.labels[D.strands[sid].w[k]], []).append(q)
        for v in cpos.values():
            v.sort()
        return D, nC, cpos

    def _segment_of(self, D, cpos, sid: int, k: int) -> int:
        """C-segment (slot coordinates) of the crossing of dart k of a strand."""
        d = D.strands[sid].w[k]
        e = self.T.labels[d]
        q = D.pos[(sid, k)]
        below = sum(1 for p in cpos.get(e, ()) if p < q)
        return below if d == self.T.primary[e] else self.W[e] - below

    def _central_exits(self, D, cpos, sid, ks) -> list:
        out = []
        w = D.strands[sid].w
        for k in ks:
            if self._segment_of(D, cpos, sid, k) == self.central_index(w[k]):
                out.append(w[k])
        return out

    def transfer(self, L: Lamination) -> dict:
        """Components of L (disjoint from the curves) moved into the pieces:
        {piece index: lamination}.  Components parallel to a cutting curve
        become puncture loops there and are dropped."""
        comps = [(p, m) for p, m in L.components() if p not in self.curves]
        D, nC, cpos = self._drawn([p for p, _ in comps])
        for sid in range(nC, len(D.strands)):
            if any(o[0] < nC for _, _, o in crossings_along(D, sid)):
                raise CutError("lamination meets the cutting curves")
        found: dict = {}
        for n, (p, m) in enumerate(comps):
            sid = nC + n
            st = D.strands[sid]
            exits = self._central_exits(D, cpos, sid, range(len(st.w)))
            if not exits:
                continue
            i = self.local[exits[0]][0]
            P = self.pieces[i].T
            w = [self.local[d][1] for d in exits]
            q = Curve.make(P, w) if isinstance(p, Curve) else Arc.make(P, w)
            if isinstance(q, Curve) and (q.is_trivial() or q.is_peripheral(P)):
                continue
            found.setdefault(i, []).append((q, m))
        return {i: from_components(self.pieces[i].T, v) for i, v in found.items()}

    def locate(self, path) -> int | None:
        """Index of the piece holding a path disjoint from the curves."""
        got = self.transfer(from_components(self.T, [(path, 1)]))
        return next(iter(got), None)

    # projections --------------------------------------------------------
    def kappa(self, L: Lamination) -> dict:
        """Arc systems cut out of each piece by L, parallel copies merged:
        {piece index: lamination of arcs}.  Components of L missing the
        curves contribute nothing (they do not project)."""
        paths = [p for p, _ in L.components()]
        D, nC, cpos = self._drawn(paths)
        found: dict = {}
        for n in range(len(paths)):
            sid = nC + n
            st = D.strands[sid]
            cr = [(k, ch, o) for k, ch, o in crossings_along(D, sid) if o[0] < nC]
            if not cr:
                continue
            for i, a in self._pieces_of(D, cpos, st, cr):
                if a not in found.setdefault(i, []):
                    found[i].append(a)
        return {i: from_components(self.pieces[i].T, [(a, 1) for a in v])
                for i, v in found.items()}

    def _pieces_of(self, D, cpos, st, cr):
        n = len(st.w)
        sid = st.sid
        spans = []
        m = len(cr)
        for i in range(m - 1 if not st.cyclic else m):
            a, b = cr[i], cr[(i + 1) % m]
            k0, k1 = a[0], b[0]
            if st.cyclic and i == m - 1:
                ks = [j % n for j in range(k0, k1 + n)]
            else:
                ks = list(range(k0, k1))
            spans.append((a, b, ks))
        if not st.cyclic:
            spans.append((None, cr[0], list(range(0, cr[0][0]))))
            spans.append((cr[-1], None, list(range(cr[-1][0], n))))
        out = []
        for a, b, ks in spans:
            out.append(self._piece_arc(D, cpos, sid, a, b, ks))
        return out

    def _piece_arc(self, D, cpos, sid, a, b, ks):
        w = D.strands[sid].w
        glue = self.T.glue
        segs = [(w[k], self._segment_of(D, cpos, sid, k)) for k in ks]
        if a is not None and b is not None and not segs:
            # between two neighbouring cutting chords in one triangle
            slot = self._chord_band(D, cpos, a[2], b[2])
            i, loc = self.local[slot]
            return i, Arc.make(self.pieces[i].T, (loc,))
        start = end = None
        banded = False
        if a is not None:
            start, _ = self._corner(a[1], a[2], segs, forward=True)
        if b is not None:
            back = [(glue[d], self.W[self.T.labels[d]] - j) for d, j in reversed(segs)]
            end, banded = self._corner(b[1], b[2], back, forward=False)
        if start == "band" or end == "band":
            slot = self.class_slots[self._find(self.seg(*segs[0]))][0]
            i, loc = self.local[slot]
            return i, Arc.make(self.pieces[i].T, (loc,))
        exits = [d for d, j in segs if j == self.central_index(d)]
        if end is not None and banded:
            # the last exit only leads into the band the piece ends in
            exits.pop()
        anchor = start if start is not None else (exits[0] if exits else end)
        i = self.local[anchor][0]
        P = self.pieces[i].T
        word = []
        if start is not None:
            t, k = divmod(self.local[start][1], 3)
            word.append(P.glue[3 * t + (k + 1) % 3])
        word.extend(self.local[d][1] for d in exits)
        if end is not None:
            t, k = divmod(self.local[end][1], 3)
            word.append(3 * t + (k + 1) % 3)
        return i, Arc.make(P, word)

    def _chord_band(self, D, cpos, ca, cb) -> int:
        """Cut slot of the strip between two cutting chords of one family."""
        fam = _family(ca)
        t = next(t for t, ch in D.chords.items() if ca in ch)
        slot = 3 * t + (fam + 1) % 3
        side = slot % 3

        def index(chord):
            r = chord[2][1] if chord[2][0] == side else chord[3][1]
            e = self.T.labels[slot]
            ps = cpos.get(e, ())
            if slot == self.T.primary[e]:
                return sum(1 for p in ps if p <= r - 1)
            return sum(1 for p in ps if p >= D.count[e] - r)
        j = min(index(ca), index(cb))
        return self.class_slots[self._find(self.seg(slot, j))][0]

    def _corner(self, own, other, segs, forward: bool):
        """Cut corner (slot 3t+k of the big surface) where a piece leaving
        the cutting chord ``other`` along ``own`` starts, or "band" when
        the piece never leaves the band it starts in; the flag says a
        band was crossed first."""
        T = self.T
        fam = _family(other)
        d, j = segs[0]
        if j == self.central_index(d):
            return 3 * (d // 3) + fam, False
        # the piece starts in a band, on the long side holding ``other``;
        # track that side, as an end of the current edge segment
        exit_p = own[3] if forward else own[2]
        s = d % 3
        r_other = other[2][1] if other[2][0] == s else other[3][1]
        lo = r_other < exit_p[1]
        for d, j in segs:
            g = T.glue[d]
            j2 = self.W[T.labels[d]] - j
            lo = not lo
            t2, s2 = divmod(g, 3)
            if j2 == self.central_index(g):
                return 3 * t2 + ((s2 - 1) % 3 if lo else s2), True
            lo = not lo
        return "band", True


def _family(chord) -> int:
    sides = {chord[2][0], chord[3][0]}
    return next(k for k in range(3) if sides == {k, (k + 1) % 3})


def cut(T: IdealTriangulation, C: Lamination) -> list:
    """Pieces of the surface cut along the multicurve C."""
    return Cut(T, C).pieces
