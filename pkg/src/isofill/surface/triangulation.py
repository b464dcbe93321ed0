"""Ideal triangulations of punctured surfaces.

Slots are integers 3*t + s: side s of triangle t.  Corners and sides are
in counterclockwise order; side s runs from corner s-1 to corner s, so
corner k sits between sides k and k+1.  ``glue`` is the fixed-point-free
involution on slots; gluing always reverses the side direction.

A slot read as a *dart* means "leave triangle t through side s".  That is
the dual trivalent ribbon graph all path computations run on.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


def rot(slot: int, r: int) -> int:
    return 3 * (slot // 3) + (slot % 3 + r) % 3


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class IdealTriangulation:
    glue: tuple
    labels: Optional[tuple] = None     # slot -> edge id; default by first slot

    def __post_init__(self):
        n = len(self.glue)
        if n == 0 or n % 3:
            raise SurfaceError("slot count must be a positive multiple of 3")
        for x, y in enumerate(self.glue):
            if y == x or self.glue[y] != x:
                raise SurfaceError(f"gluing is not a fixed-point-free involution at {x}")
        if self.labels is None:
            edge_of = [-1] * n
            k = 0
            for x in range(n):
                if edge_of[x] < 0:
                    edge_of[x] = edge_of[self.glue[x]] = k
                    k += 1
            object.__setattr__(self, "labels", tuple(edge_of))
        edge_of = self.labels
        primary = [None] * (n // 2)
        for x in range(n):
            e = edge_of[x]
            if not (0 <= e < n // 2) or edge_of[self.glue[x]] != e:
                raise SurfaceError("edge labels do not match the gluing")
            if primary[e] is None:
                primary[e] = x
        object.__setattr__(self, "edge_of", tuple(edge_of))
        object.__setattr__(self, "primary", tuple(primary))
        # corners: corner k of t is the same puncture as corner s' of t'
        # where (t', s') = glue(t, k+1)
        corner_cls = [-1] * n
        p = 0
        for c in range(n):
            if corner_cls[c] >= 0:
                continue
            x = c
            while corner_cls[x] < 0:
                corner_cls[x] = p
                x = self.glue[rot(x, 1)]
            p += 1
        object.__setattr__(self, "corner_puncture", tuple(corner_cls))
        object.__setattr__(self, "num_punctures", p)
        # connectivity
        seen, stack = {0}, [0]
        while stack:
            t = stack.pop()
            for s in range(3):
                u = self.glue[3 * t + s] // 3
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != self.F:
            raise SurfaceError("triangulation is not connected")
        chi = p - self.E + self.F
        if chi % 2:
            raise SurfaceError("odd Euler characteristic")
        object.__setattr__(self, "genus", (2 - chi) // 2)

    # sizes
    @property
    def F(self) -> int:
        return len(self.glue) // 3

    @property
    def E(self) -> int:
        return len(self.glue) // 2

    @property
    def punctures(self) -> int:
        return self.num_punctures

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus - self.num_punctures

    @property
    def xi(self) -> int:
        """Complexity 3g - 3 + p."""
        return 3 * self.genus - 3 + self.num_punctures

    def iota(self, x: int) -> int:
        return self.glue[x]

    def next_spiral(self, d: int) -> int:
        """Dart after d on a path that keeps turning +1 (corner on the right)."""
        return rot(self.glue[d], 1)

    def puncture_cycles(self) -> list:
        """Cyclic dart sequences of the +1 spirals, one per puncture."""
        seen = set()
        out = []
        for d in range(len(self.glue)):
            if d in seen:
                continue
            cyc = []
            x = d
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.next_spiral(x)
            out.append(tuple(cyc))
        return out

    def spiral_puncture(self, d: int) -> int:
        """Puncture circled by the +1 spiral through dart d."""
        # d enters the next triangle at glue(d) = (t', s'); the +1 turn
        # goes round corner s' of t'
        return self.corner_puncture[self.glue[d]]

    def edge_ends(self, e: int) -> tuple:
        x = self.primary[e]
        t, s = divmod(x, 3)
        return (self.corner_puncture[3 * t + (s - 1) % 3], self.corner_puncture[x])

    def flippable(self, e: int) -> bool:
        x = self.primary[e]
        return x // 3 != self.glue[x] // 3

    def __eq__(self, other):
        return isinstance(other, IdealTriangulation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        """Triangles as cyclic triples of edge ids, up to reindexing.

        The gluing is determined by this, so two triangulations with the
        same key are the same edge-labelled triangulation.
        """
        tris = []
        for t in range(self.F):
            trip = self.labels[3 * t:3 * t + 3]
            tris.append(min(trip[k:] + trip[:k] for k in range(3)))
        return tuple(sorted(tris))

    def __repr__(self):
        return (f"IdealTriangulation(g={self.genus}, p={self.num_punctures}, "
                f"F={self.F}, E={self.E})")


def from_labelled(tris: list) -> IdealTriangulation:
    """Glue triangles given as triples of side labels; each label twice."""
    where: dict = {}
    for t, labels in enumerate(tris):
        for s, lab in enumerate(labels):
            where.setdefault(lab, []).append(3 * t + s)
    glue = [0] * (3 * len(tris))
    for lab, slots in where.items():
        if len(slots) != 2:
            raise SurfaceError(f"label {lab!r} used {len(slots)} times")
        a, b = slots
        glue[a], glue[b] = b, a
    return IdealTriangulation(tuple(glue))


def _split(tris: list, k: int, tag) -> None:
    """Put a new puncture inside triangle k (three triangles replace one)."""
    L = tris[k]
    new = []
    for s in range(3):
        # triangle (c_{s-1}, c_s, x): sides x->c_{s-1}, old side s, c_s->x
        new.append(((tag, (s - 1) % 3), L[s], (tag, s)))
    tris[k:k + 1] = new


def new_surface(g: int, p: int) -> IdealTriangulation:
    """Fixed triangulation of S_{g,p}.

    Genus 0: two p-gons glued along their boundary, each fanned from
    polygon vertex 0; punctures are the polygon vertices 0..p-1.
    Genus >= 1: the 4g-gon a1 b1 a1' b1' ... fanned from one corner, with
    p - 1 extra punctures put into distinct triangles.
    """
    if g < 0 or p < 1:
        raise SurfaceError("need g >= 0 and p >= 1")
    if 2 - 2 * g - p >= 0:
        raise SurfaceError(f"S_{{{g},{p}}} is not hyperbolic")
    if g == 0:
        tris = []
        def side(a, b):
            return ("side", min(a, b), max(a, b))
        def dt(i):
            return side(0, 1) if i == 1 else side(0, p - 1) if i == p - 1 else ("dt", i)
        def db(i):
            return side(0, 1) if i == 1 else side(0, p - 1) if i == p - 1 else ("db", i)
        for i in range(1, p - 1):
            # top (0, i, i+1): sides (i+1 -> 0), (0 -> i), (i -> i+1)
            tris.append((dt(i + 1), dt(i), side(i, i + 1)))
        for i in range(1, p - 1):
            # bottom (0, i+1, i): sides (i -> 0), (0 -> i+1), (i+1 -> i)
            tris.append((db(i), db(i + 1), side(i, i + 1)))
        return from_labelled(tris)
    n = 4 * g
    letters = []
    for k in range(g):
        letters += [("a", k), ("b", k), ("a", k), ("b", k)]
    tris = []
    for i in range(1, n - 1):
        # (0, i, i+1): sides (i+1 -> 0), (0 -> i), (i -> i+1)
        s0 = letters[n - 1] if i + 1 == n - 1 else ("d", i + 1)
        s1 = letters[0] if i == 1 else ("d", i)
        tris.append((s0, s1, letters[i]))
    for j in range(p - 1):
        _split(tris, (3 * j) % len(tris), ("x", j))
    return from_labelled(tris)


def flip(T: IdealTriangulation, e: int):
    """Flip edge e.

    Edge ids are kept; the new diagonal takes the id e.  Returns
    (T', e, slot_map), where slot_map sends the
    four outer slots A, B, C, D of the square to their new names; all other
    slots keep their names.  With t1 the triangle of the primary slot
    (side s1) and t2 the other (side s2), A = (t1, s1+1), B = (t1, s1+2),
    C = (t2, s2+1), D = (t2, s2+2).  flip(flip(T, e)[0], e) == T as
    edge-labelled triangulations (slot names may differ).
    """
    if not T.flippable(e):
        raise SurfaceError(f"edge {e} is not flippable")
    x = T.primary[e]
    y = T.glue[x]
    t1, s1 = divmod(x, 3)
    t2, s2 = divmod(y, 3)
    A, B = 3 * t1 + (s1 + 1) % 3, 3 * t1 + (s1 + 2) % 3
    C, D = 3 * t2 + (s2 + 1) % 3, 3 * t2 + (s2 + 2) % 3
    # both new triangles listed counterclockwise starting at e'
    smap = {}
    ends = []
    for t, tri, base in ((t1, (None, B, C), s1), (t2, (None, D, A), s2)):
        for k, lab in enumerate(tri):
            slot = 3 * t + (base + k) % 3
            if lab is None:
                ends.append(slot)
            else:
                smap[lab] = slot
    glue = list(T.glue)
    labels = list(T.labels)
    for old, nw in smap.items():
        labels[nw] = T.labels[old]
    labels[ends[0]] = labels[ends[1]] = e
    upd = {ends[0]: ends[1]}
    for old, nw in smap.items():
        partner = T.glue[old]
        upd[nw] = smap.get(partner, partner)
    for a, b in upd.items():
        glue[a] = b
        glue[b] = a
    return IdealTriangulation(tuple(glue), tuple(labels)), e, smap
