"""Minimal-position drawing of a family of reduced paths.

Points on an edge are ordered by following two strands forwards until
they part, or else backwards; whichever turns left is on the left.
Strands that never part are parallel copies and keep a fixed order.
Inside a triangle each passage is a straight chord between its two
points (or a corner, for the ends of an arc), so crossings are read off
from the cyclic order of chord ends.

On slot (t, s), positions count from corner s-1 towards corner s, and
"left" of a dart leaving through (t, s) means towards corner s.
"""
from __future__ import annotations

from functools import cmp_to_key

from .paths import Arc, Curve, tail_length
from .triangulation import IdealTriangulation, rot


class Strand:
    """One drawn component.  ``w`` is the drawn word; ``get`` reads the
    infinite path (cyclic for curves, spiral tails for arcs), and
    ``lo <= i < hi`` marks the window of an arc inside ``w``."""

    def __init__(self, T: IdealTriangulation, path, sid: int, K: int):
        self.path = path
        self.sid = sid
        self.T = T
        if isinstance(path, Curve):
            self.cyclic = True
            self.w = list(path.word)
            return
        self.cyclic = False
        win = list(path.window)
        # Tails stop at their K-th pass through the puncture's reference
        # dart, counted from the window.  Tails into one puncture are
        # parallel spirals, so equal pass counts leave every drawn end
        # innermost and the end chords to the corner cross nothing.
        fwd = []
        d = win[-1]
        ref_f = _ref(T, T.spiral_puncture(d))
        passes = 0
        while passes < K:
            d = rot(T.glue[d], 1)
            fwd.append(d)
            passes += d == ref_f
        back = []
        d = win[0]
        ref_b = T.glue[_ref(T, T.corner_puncture[win[0]])]
        passes = 0
        while passes < K:
            d = T.glue[rot(d, 1)]
            back.append(d)
            passes += d == ref_b
        self.w = back[::-1] + win + fwd
        self.lo, self.hi = len(back), len(back) + len(win)
        self._pre: list = []     # darts before w, nearest first
        self._post: list = []    # darts after w
        t0, x0 = divmod(self.w[0], 3)
        self.start_corner = 3 * t0 + x0
        self.end_corner = T.glue[self.w[-1]]

    def get(self, i: int) -> int:
        w = self.w
        if self.cyclic:
            return w[i % len(w)]
        if 0 <= i < len(w):
            return w[i]
        glue = self.T.glue
        if i >= len(w):
            ext = self._post
            while len(ext) <= i - len(w):
                d = ext[-1] if ext else w[-1]
                ext.append(rot(glue[d], 1))
            return ext[i - len(w)]
        ext = self._pre
        while len(ext) < -i:
            d = ext[-1] if ext else w[0]
            ext.append(glue[rot(d, 1)])
        return ext[-i - 1]

    def in_tail(self, i: int, forward: bool) -> bool:
        """Is the reading at index i inside a spiral tail, heading
        into the puncture when read forwards (or backwards)?"""
        if self.cyclic:
            return False
        return i >= self.hi if forward else i < self.lo

    def __len__(self):
        return len(self.w)


_REF_CACHE: dict = {}


def _ref(T, puncture: int) -> int:
    key = (T.glue, T.labels)
    refs = _REF_CACHE.get(key)
    if refs is None:
        refs = {}
        for cyc in T.puncture_cycles():
            refs[T.spiral_puncture(cyc[0])] = min(cyc)
        _REF_CACHE[key] = refs
    return refs[puncture]


class Drawing:
    def __init__(self, T: IdealTriangulation, paths: list):
        self.T = T
        longest = max([len(_word(p)) for p in paths] + [1])
        # windings kept on each arc tail: enough to outlast any core
        K = longest + 2
        self.strands = [Strand(T, p, i, K) for i, p in enumerate(paths)]
        self.limit = 2 * sum(len(st.w) for st in self.strands) + 6 * T.F + 12
        by_edge: dict = {}
        for s in self.strands:
            for k, d in enumerate(s.w):
                by_edge.setdefault(T.labels[d], []).append((s.sid, k))
        self.pos = {}
        self.count = [0] * T.E
        for e, pts in by_edge.items():
            pts.sort(key=cmp_to_key(lambda P, Q: self._cmp(e, P, Q)))
            for q, P in enumerate(pts):
                self.pos[P] = q
            self.count[e] = len(pts)
        self._build_chords()

    # ordering -----------------------------------------------------------
    def _seq(self, e, P):
        """Readers (forward(r), backward(r), tail(r, forward)) in the
        primary direction of e; tail says the reading at step r has
        become a spiral into a puncture, so it is fixed from then on."""
        s = self.strands[P[0]]
        k = P[1]
        glue = self.T.glue
        if s.w[k] == self.T.primary[e]:
            return (lambda r: s.get(k + r)), (lambda r: s.get(k - r)), \
                (lambda r, f: s.in_tail(k + r if f else k - r, f))
        return (lambda r: glue[s.get(k - r)]), (lambda r: glue[s.get(k + r)]), \
            (lambda r, f: s.in_tail(k - r if f else k + r, not f))

    def _walk(self, x, y, tx, ty, forward: bool, bound: int):
        """First r >= 1 where readers x, y differ, or None if never."""
        r = 1
        while True:
            a, b = x(r), y(r)
            if a != b:
                return r
            if tx(r, forward) and ty(r, forward):
                return None
            if r > bound:
                return None
            r += 1

    def _left(self, e, P, Q) -> bool:
        fP, bP, tP = self._seq(e, P)
        fQ, bQ, tQ = self._seq(e, Q)
        glue = self.T.glue
        sp, sq = self.strands[P[0]], self.strands[Q[0]]
        if sp.cyclic and sq.cyclic:
            bound = len(sp.w) + len(sq.w) + 1
        else:
            bound = self.limit
        fwd = bwd = None
        r = self._walk(fP, fQ, tP, tQ, True, bound)
        if r is not None:
            a, b = fP(r), fQ(r)
            c = glue[fP(r - 1)] % 3
            fwd = (a % 3 == (c + 2) % 3, r, (a // 3, min(a, b), max(a, b)))
        r = self._walk(bP, bQ, tP, tQ, False, bound)
        if r is not None:
            a, b = bP(r), bQ(r)
            x = bP(r - 1) % 3
            ga, gb = glue[a], glue[b]
            bwd = (ga % 3 == (x + 1) % 3, r, (ga // 3, min(ga, gb), max(ga, gb)))
        if fwd and bwd:
            if fwd[0] == bwd[0]:
                return fwd[0]
            # crossing strands: the nearer parting decides, which puts the
            # crossing mid-stretch whatever the edge's direction
            if fwd[1] != bwd[1]:
                return fwd[0] if fwd[1] < bwd[1] else bwd[0]
            return fwd[0] if fwd[2] <= bwd[2] else bwd[0]
        if fwd or bwd:
            return (fwd or bwd)[0]
        # parallel copies: lower sid on the left in its own direction
        rev = self.strands[P[0]].w[P[1]] != self.T.primary[e]
        return (P[0] < Q[0]) != rev

    def _cmp(self, e, P, Q) -> int:
        if P == Q:
            return 0
        return 1 if self._left(e, P, Q) else -1

    # chords -------------------------------------------------------------
    def point_param(self, slot: int, P) -> tuple:
        """Boundary position (side, rank): corner k sits at (k+1 mod 3, 0)."""
        e = self.T.labels[slot]
        q = self.pos[P]
        if slot != self.T.primary[e]:
            q = self.count[e] - 1 - q
        return (slot % 3, q + 1)

    def _build_chords(self):
        """chords[t] = list of (strand, k, p_in, p_out): passage of strand
        into triangle t before dart index k (k == len for an arc's final
        piece); p_in/p_out are boundary positions."""
        T = self.T
        self.chords = {t: [] for t in range(T.F)}
        for s in self.strands:
            n = len(s.w)
            if s.cyclic:
                for k in range(n):
                    a = s.w[k - 1]
                    pin = self.point_param(T.glue[a], (s.sid, (k - 1) % n))
                    pout = self.point_param(s.w[k], (s.sid, k))
                    self.chords[s.w[k] // 3].append((s.sid, k, pin, pout))
                continue
            c = s.start_corner
            pin = ((c % 3 + 1) % 3, 0)
            pout = self.point_param(s.w[0], (s.sid, 0))
            self.chords[s.w[0] // 3].append((s.sid, 0, pin, pout))
            for k in range(1, n):
                pin = self.point_param(T.glue[s.w[k - 1]], (s.sid, k - 1))
                pout = self.point_param(s.w[k], (s.sid, k))
                self.chords[s.w[k] // 3].append((s.sid, k, pin, pout))
            c = s.end_corner
            pin = self.point_param(T.glue[s.w[-1]], (s.sid, n - 1))
            pout = ((c % 3 + 1) % 3, 0)
            self.chords[c // 3].append((s.sid, n, pin, pout))

    def crossings_in(self, t: int) -> list:
        """Crossing pairs of chords in triangle t."""
        ch = self.chords[t]
        out = []
        for i in range(len(ch)):
            for j in range(i + 1, len(ch)):
                a, b = ch[i], ch[j]
                if chords_cross(a[2], a[3], b[2], b[3]):
                    out.append((a, b))
        return out

    def all_crossings(self) -> list:
        out = []
        for t in range(self.T.F):
            out.extend((t, a, b) for a, b in self.crossings_in(t))
        return out


def _inside(x, lo, hi) -> bool:
    """x strictly inside the ccw boundary interval from lo to hi."""
    if lo < hi:
        return lo < x < hi
    return x > lo or x < hi


def chords_cross(a1, a2, b1, b2) -> bool:
    if len({a1, a2, b1, b2}) < 4:
        return False
    return _inside(b1, a1, a2) != _inside(b2, a1, a2)


def order_along(chord, others: list) -> list:
    """Sort chords crossing ``chord`` (and disjoint from each other) by
    where they meet it, from its entry end to its exit end."""
    pin, pout = chord[2], chord[3]

    def before(b, c):
        # b comes first iff c lies on the exit side of b
        side_out = _inside(pout, b[2], b[3])
        return _inside(c[2], b[2], b[3]) == side_out

    def cmp(b, c):
        if b is c:
            return 0
        return -1 if before(b, c) else 1
    return sorted(others, key=cmp_to_key(cmp))


def from_left(chord, other) -> bool:
    """Does ``chord`` start on the left of ``other`` (as directed)?"""
    # left of a directed chord is the ccw boundary arc from its end to its start
    return _inside(chord[2], other[3], other[2])


def _word(p) -> tuple:
    return p.word if isinstance(p, Curve) else p.window


def crossings_along(D: Drawing, sid: int) -> list:
    """Crossings met by strand ``sid`` in order: (k, own chord, other chord),
    where k is the chord's dart index."""
    own = {}
    for t, ch in D.chords.items():
        for c in ch:
            if c[0] == sid:
                own[c[1]] = (t, c)
    hits: dict = {}
    for t, a, b in D.all_crossings():
        if a[0] == sid:
            hits.setdefault(a[1], []).append(b)
        if b[0] == sid:
            hits.setdefault(b[1], []).append(a)
    out = []
    for k in sorted(hits):
        chord = own[k][1]
        for o in order_along(chord, hits[k]):
            out.append((k, chord, o))
    return out
