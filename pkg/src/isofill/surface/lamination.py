"""Integer weights on edges, decoded into curve and arc components.

Weight w >= 0 counts transverse crossings of the edge; w < 0 stands for
|w| parallel copies of the arc along the edge, which nothing else may
cross.  With x = max(w, 0) on the sides of a triangle, either one side
exceeds the sum of the others, and the excess ends at the opposite
corner (terminal segments of arcs), or the corner counts
(x_k + x_{k+1} - x_{k+2}) / 2 must be nonnegative integers.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .paths import Arc, Curve, weights_of
from .triangulation import IdealTriangulation, new_surface


class LaminationError(ValueError):
    pass


def triangle_counts(x: tuple):
    """Corner counts c[k] (corner k between sides k, k+1) and the terminal
    (corner, count) or None, for crossing counts x on sides 0, 1, 2."""
    for s in range(3):
        a, b, c = x[s], x[(s + 1) % 3], x[(s + 2) % 3]
        if a > b + c:
            cc = [0, 0, 0]
            cc[s] = b
            cc[(s + 2) % 3] = c
            return cc, ((s + 1) % 3, a - b - c)
    tot = x[0] + x[1] + x[2]
    if tot % 2:
        raise LaminationError("odd weight sum in a triangle")
    return [(x[k] + x[(k + 1) % 3] - x[(k + 2) % 3]) // 2 for k in range(3)], None


@dataclass(frozen=True, eq=False)
class Lamination:
    T: IdealTriangulation
    weights: tuple

    def __post_init__(self):
        w = tuple(int(v) for v in self.weights)
        object.__setattr__(self, "weights", w)
        if len(w) != self.T.E:
            raise LaminationError(f"expected {self.T.E} weights, got {len(w)}")
        for t in range(self.T.F):
            triangle_counts(self.crossings(t))

    def crossings(self, t: int) -> tuple:
        return tuple(max(self.weights[self.T.labels[3 * t + s]], 0) for s in range(3))

    def __eq__(self, other):
        return (isinstance(other, Lamination) and self.T == other.T
                and self.weights == other.weights)

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"Lamination({list(self.weights)})"

    def is_empty(self) -> bool:
        return not any(self.weights)

    # decoding -----------------------------------------------------------
    def components(self) -> list:
        """[(Curve | Arc, multiplicity)] in a fixed order."""
        cached = getattr(self, "_comps", None)
        if cached is None:
            cached = _decode(self)
            object.__setattr__(self, "_comps", cached)
        return cached

    def curves(self) -> list:
        return [c for c, _ in self.components() if isinstance(c, Curve)]

    def arcs(self) -> list:
        return [c for c, _ in self.components() if isinstance(c, Arc)]

    def is_multicurve(self) -> bool:
        return all(isinstance(c, Curve) for c, _ in self.components())


def from_components(T: IdealTriangulation, comps) -> Lamination:
    return Lamination(T, tuple(weights_of(T, comps)))


def from_path(T: IdealTriangulation, c, mult: int = 1) -> Lamination:
    return from_components(T, [(c, mult)])


def _decode(L: Lamination) -> list:
    T = L.T
    n = 3 * T.F
    x = [max(L.weights[T.labels[a]], 0) for a in range(n)]
    # partner[(slot, pos)] inside the slot's triangle: another point or
    # ('end', corner)
    partner = {}
    for t in range(T.F):
        cc, term = triangle_counts(tuple(x[3 * t + s] for s in range(3)))
        for k in range(3):
            a, b = 3 * t + k, 3 * t + (k + 1) % 3
            for r in range(cc[k]):
                p, q = (a, x[a] - 1 - r), (b, r)
                partner[p], partner[q] = q, p
        if term is not None:
            corner, cnt = term
            s = (corner + 2) % 3
            a = 3 * t + s
            start = cc[(s - 1) % 3]
            for r in range(cnt):
                partner[(a, start + r)] = ("end", 3 * t + corner)
    seen = set()
    comps: list = []

    def across(p):
        a, pos = p
        return (T.glue[a], x[a] - 1 - pos)

    # arcs first: start at each terminal point, leaving through its slot
    for p in sorted(k for k, v in partner.items() if v[0] == "end"):
        if p in seen:
            continue
        corner = partner[p][1]
        t, k = divmod(corner, 3)
        darts = [T.glue[3 * t + (k + 1) % 3]]
        cur = p
        while True:
            seen.add(cur)
            darts.append(cur[0])
            q = across(cur)
            seen.add(q)
            nxt = partner[q]
            if nxt[0] == "end":
                z = q[0] % 3
                darts.append(3 * (q[0] // 3) + (z + 2) % 3)
                break
            cur = nxt
        comps.append(Arc.make(T, darts))
    for a in range(n):
        for pos in range(x[a]):
            p = (a, pos)
            if p in seen:
                continue
            darts = []
            cur = p
            while cur not in seen:
                seen.add(cur)
                darts.append(cur[0])
                q = across(cur)
                seen.add(q)
                cur = partner[q]
            comps.append(Curve.make(T, darts))
    for e, w in enumerate(L.weights):
        if w < 0:
            comps.extend([Arc.make(T, (T.primary[e],))] * (-w))
    cnt = Counter(comps)
    order = sorted(cnt, key=lambda c: (isinstance(c, Arc), len(_word(c)), _word(c)))
    return [(c, cnt[c]) for c in order]


def _word(c) -> tuple:
    return c.word if isinstance(c, Curve) else c.window


# file format --------------------------------------------------------------
def parse_lamination(text: str) -> Lamination:
    from ..complex_core import ParseError
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != "lamination v1":
        raise ParseError("missing header 'lamination v1'")
    g = p = None
    weights = None
    for ln in lines[1:]:
        tok = ln.split()
        try:
            if tok[0] == "surface" and len(tok) == 3:
                g, p = int(tok[1]), int(tok[2])
            elif tok[0] == "weights":
                weights = [int(v) for v in tok[1:]]
            else:
                raise ParseError(f"unknown record: {ln!r}")
        except ValueError as exc:
            raise ParseError(f"bad number in {ln!r}") from exc
    if g is None or weights is None:
        raise ParseError("need 'surface' and 'weights' records")
    try:
        return Lamination(new_surface(g, p), tuple(weights))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize_lamination(L: Lamination) -> str:
    T = L.T
    return (f"lamination v1\nsurface {T.genus} {T.punctures}\n"
            f"weights {' '.join(str(v) for v in L.weights)}\n")
