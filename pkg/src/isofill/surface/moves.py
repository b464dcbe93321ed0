"""Flips acting on laminations, and mapping classes as move words.

A flip only changes the square around the flipped edge, so each path is
rewritten passage by passage: a passage enters the square through one
outer side and leaves through another, crossing the new diagonal exactly
when those sides end up in different new triangles.
"""
from __future__ import annotations

from dataclasses import dataclass

from .intersection import dehn_twist
from .lamination import Lamination, from_components
from .paths import Arc, Curve, tail_length
from .triangulation import IdealTriangulation, flip


def _rewrite(T, e, T2, smap, w: list, cyclic: bool) -> list:
    x = T.primary[e]
    y = T.glue[x]
    inner = {x, y}
    square = {x // 3, y // 3}
    diag = {}
    for nw in smap.values():
        t = nw // 3
        diag[t] = next(s for s in range(3 * t, 3 * t + 3) if T2.labels[s] == e)
    n = len(w)
    out = []
    lo = 0 if cyclic else 2
    for k in range(lo, n):
        d = w[k]
        if d // 3 not in square:
            out.append(d)
            continue
        if d in inner:
            continue
        prev = w[(k - 1) % n]
        if prev in inner:
            prev = w[(k - 2) % n]
        X = smap[T.glue[prev]]
        Y = smap[d]
        if X // 3 != Y // 3:
            out.append(diag[X // 3])
        out.append(Y)
    return out


def flip_path(T, e, T2, smap, c):
    if isinstance(c, Curve):
        return Curve.make(T2, _rewrite(T, e, T2, smap, list(c.word), True))
    k = tail_length(T, len(c.window))
    w = _rewrite(T, e, T2, smap, c.word(T, k, k), False)
    return Arc.make(T2, w[:-2])


def flip_laminations(T: IdealTriangulation, e: int, *laminations):
    """Flip e; returns (T', [transported laminations])."""
    T2, _, smap = flip(T, e)
    out = []
    for L in laminations:
        if L.T != T:
            raise ValueError("lamination is not on this triangulation")
        comps = [(flip_path(T, e, T2, smap, c), m) for c, m in L.components()]
        out.append(from_components(T2, comps))
    return T2, out


def tropical_flip_weight(T: IdealTriangulation, e: int, w) -> int:
    """max(w(a)+w(c), w(b)+w(d)) - w(e) for a multicurve's weights."""
    x = T.primary[e]
    y = T.glue[x]
    a, b = T.labels[3 * (x // 3) + (x + 1) % 3], T.labels[3 * (x // 3) + (x + 2) % 3]
    c, d = T.labels[3 * (y // 3) + (y + 1) % 3], T.labels[3 * (y // 3) + (y + 2) % 3]
    return max(w[a] + w[c], w[b] + w[d]) - w[e]


@dataclass(frozen=True)
class MappingClass:
    """Word of Dehn twists (curve weights, power), applied left to right."""

    T: IdealTriangulation
    moves: tuple = ()

    @staticmethod
    def twist(c: Lamination, power: int = 1) -> "MappingClass":
        if not c.is_multicurve():
            raise ValueError("twist needs a multicurve")
        return MappingClass(c.T, ((c.weights, power),))

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        """self * other applies other first."""
        moves = list(other.moves)
        for m in self.moves:
            if moves and moves[-1][0] == m[0]:
                p = moves[-1][1] + m[1]
                moves.pop()
                if p:
                    moves.append((m[0], p))
            else:
                moves.append(m)
        return MappingClass(self.T, tuple(moves))

    def inverse(self) -> "MappingClass":
        return MappingClass(self.T, tuple((c, -p) for c, p in reversed(self.moves)))

    def __call__(self, L: Lamination) -> Lamination:
        for c, p in self.moves:
            L = dehn_twist(L, Lamination(self.T, c), p)
        return L

    def word(self) -> str:
        return " ; ".join(f"twist {' '.join(map(str, c))} ^ {p}" for c, p in self.moves)


def apply(mc: MappingClass, L: Lamination) -> Lamination:
    return mc(L)
