"""Arc and curve complexes of a surface as adjacency oracles.

Vertices are weight tuples (hashable and sortable).  Two vertices are
adjacent when they are distinct and disjoint.  Common neighbours come
from a finite pool, every simple path whose dart word has length at most
``window``, so ``exhaustive`` is False and fill counts are upper bounds.
"""
from __future__ import annotations

from ..complex_core import AdjacencyOracle, OracleError
from .generate import basic_curves
from .intersection import intersection_number
from .lamination import Lamination, LaminationError, from_path
from .paths import Arc, Curve
from .triangulation import IdealTriangulation


def _simple(T, p):
    try:
        L = from_path(T, p)
    except LaminationError:
        return None
    return L if L.components() == [(p, 1)] else None


def windowed_paths(T: IdealTriangulation, window: int, kind: str) -> list:
    """Simple arcs ("arc") or essential curves ("curve") spelled by dart
    words of length <= window, as laminations, sorted by weights."""
    if kind not in ("arc", "curve"):
        raise ValueError(kind)
    found = {}
    words = [[d] for d in range(3 * T.F)]
    for _ in range(window):
        nxt = []
        for w in words:
            if kind == "arc":
                p = Arc.make(T, w)
            elif T.glue[w[-1]] // 3 == w[0] // 3 and T.glue[w[-1]] != w[0]:
                p = Curve.make(T, w)
                if p.is_trivial() or p.is_peripheral(T):
                    p = None
            else:
                p = None
            if p is not None:
                L = _simple(T, p)
                if L is not None:
                    found.setdefault(L.weights, L)
            t = T.glue[w[-1]] // 3
            back = T.glue[w[-1]]
            nxt += [w + [d] for d in range(3 * t, 3 * t + 3) if d != back]
        words = nxt
    return [found[k] for k in sorted(found)]


class SurfaceComplex(AdjacencyOracle):
    """Arc complex, curve complex, or both together (kind "arc-curve")."""

    exhaustive = False

    def __init__(self, T: IdealTriangulation, kind: str = "curve", window: int = 4,
                 extra=()):
        self.T = T
        self.kind = kind
        kinds = {"arc": ("arc",), "curve": ("curve",), "arc-curve": ("arc", "curve")}[kind]
        pool = {}
        for k in kinds:
            for L in windowed_paths(T, window, k):
                pool[L.weights] = L
        if "curve" in kinds:
            # short words rarely close up, so seed with the edge curves
            for c in basic_curves(T):
                L = from_path(T, c)
                pool.setdefault(L.weights, L)
        self._pool = pool
        self._extra = {}
        self._miss: dict = {}
        for L in extra:
            self.add(L)

    def add(self, L: Lamination):
        """Make L a vertex (and a candidate neighbour)."""
        if L.T != self.T:
            raise ValueError("lamination lives on another triangulation")
        self._extra[L.weights] = L
        return L.weights

    def lamination(self, v) -> Lamination:
        if v in self._pool:
            return self._pool[v]
        if v in self._extra:
            return self._extra[v]
        try:
            L = Lamination(self.T, v)
        except (LaminationError, TypeError) as err:
            raise OracleError(v) from err
        if len(L.components()) != 1 or L.components()[0][1] != 1:
            raise OracleError(v)
        self._extra[v] = L
        return L

    def are_adjacent(self, u, v) -> bool:
        if u == v:
            return False
        key = (u, v) if u < v else (v, u)
        hit = self._miss.get(key)
        if hit is None:
            hit = intersection_number(self.lamination(u), self.lamination(v)) == 0
            self._miss[key] = hit
        return hit

    def vertices(self):
        return sorted(set(self._pool) | set(self._extra))

    def candidate_neighbors(self, u, v):
        return [w for w in self.vertices()
                if self.are_adjacent(u, w) and self.are_adjacent(v, w)]
