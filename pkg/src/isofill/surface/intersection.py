"""Geometric intersection numbers and Dehn twists on reduced paths.

Two reduced paths cross once for each *linked* maximal common segment:
they come into the segment from one side and leave it on the other.
Common segments are taken with the second path in both orientations.
Segments that never end (equal curves, arcs spiralling into the same
puncture) do not count.
"""
from __future__ import annotations

from .lamination import Lamination, from_components
from .paths import Arc, Curve, free_reduce, reverse_word, tail_length, window_of
from .drawing import Drawing, crossings_along, from_left
from .triangulation import IdealTriangulation


class _Seq:
    """Index access to a curve (cyclic) or a truncated arc (finite)."""

    def __init__(self, T, c, k: int):
        if isinstance(c, Curve):
            self.w = list(c.word)
            self.cyclic = True
        else:
            self.w = c.word(T, k, k)
            self.cyclic = False
        self.n = len(self.w)

    def get(self, i: int):
        if self.cyclic:
            return self.w[i % self.n]
        return self.w[i] if 0 <= i < self.n else None

    def starts(self):
        return range(self.n) if self.cyclic else range(1, self.n)


def _reverse_seq(T, s: _Seq) -> _Seq:
    r = _Seq.__new__(_Seq)
    r.w = list(reverse_word(T, s.w))
    r.cyclic = s.cyclic
    r.n = s.n
    return r


def crossings(T: IdealTriangulation, a, b, k: int = None):
    """Linked common segments of a with b.

    Yields (i, seq_b, j, left) for each crossing: a[i:] and seq_b[j:] share
    a segment, seq_b is b or its reverse, and ``left`` says that a enters
    the segment from the left of seq_b.  Indices refer to ``_Seq`` views
    built with tail length k.
    """
    if k is None:
        k = tail_length(T, _size(a) + _size(b))
    A = _Seq(T, a, k)
    Bf = _Seq(T, b, k)
    out = []
    limit = A.n + Bf.n + 2
    for B in (Bf, _reverse_seq(T, Bf)):
        pos: dict = {}
        for j in B.starts():
            pos.setdefault(B.w[j], []).append(j)
        for i in A.starts():
            for j in pos.get(A.w[i], ()):
                pa, pb = A.get(i - 1), B.get(j - 1)
                if pa is None or pb is None or pa == pb:
                    continue
                m = 1
                while True:
                    x, y = A.get(i + m), B.get(j + m)
                    if x is None or y is None or m > limit:
                        m = None
                        break
                    if x != y:
                        break
                    m += 1
                if m is None:
                    continue
                # start: a came in through the side after the exit side
                left = T.glue[pa] % 3 == (A.w[i] % 3 + 1) % 3
                # end: entering through side y, a leaving through y+1 turns right
                entry = T.glue[A.get(i + m - 1)] % 3
                right = A.get(i + m) % 3 == (entry + 1) % 3
                if left == right:
                    out.append((i, B, j, left))
    return out, A


def _size(c) -> int:
    return len(c.word) if isinstance(c, Curve) else len(c.window)


def path_intersection(T: IdealTriangulation, a, b) -> int:
    if a == b:
        return 0
    return len(crossings(T, a, b)[0])


def intersection_number(L1: Lamination, L2: Lamination) -> int:
    if L1.T != L2.T:
        raise ValueError("laminations live on different triangulations")
    T = L1.T
    total = 0
    for a, m in L1.components():
        for b, n in L2.components():
            total += m * n * path_intersection(T, a, b)
    return total


def misses(L1: Lamination, L2: Lamination) -> bool:
    return intersection_number(L1, L2) == 0


def cuts(L1: Lamination, L2: Lamination) -> bool:
    return not misses(L1, L2)


def twist_path(T: IdealTriangulation, a, c: Curve, power: int):
    """Image of the path a under the Dehn twist about curve c, to the power.

    Draw a and c in minimal position and splice |power| copies of c into
    a at each crossing, in the order the crossings occur along a.  A
    positive twist turns left onto c.
    """
    if power == 0 or a == c:
        return a
    D = Drawing(T, [a, c])
    cw = D.strands[1].w
    n = len(cw)
    inserts: dict = {}
    for k, chord, other in crossings_along(D, 0):
        if other[0] != 1:
            continue
        kc = other[1]
        if from_left(chord, other) == (power > 0):
            loop = [cw[(kc + r) % n] for r in range(n)]
        else:
            loop = [T.glue[cw[(kc - 1 - r) % n]] for r in range(n)]
        inserts.setdefault(k, []).extend(loop * abs(power))
    w = []
    src = D.strands[0].w
    for k in range(len(src) + 1):
        w.extend(inserts.get(k, ()))
        if k < len(src):
            w.append(src[k])
    if isinstance(a, Curve):
        return Curve.make(T, w)
    return Arc.make(T, w)


def dehn_twist(L: Lamination, c: Lamination, power: int = 1) -> Lamination:
    """Twist L about the multicurve c (components twisted one after another)."""
    T = L.T
    if not c.is_multicurve():
        raise ValueError("can only twist about curves")
    comps = list(L.components())
    for cc, m in c.components():
        comps = [(twist_path(T, a, cc, power * m), k) for a, k in comps]
    return from_components(T, comps)
