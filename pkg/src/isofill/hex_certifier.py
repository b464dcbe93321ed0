"""Lower bounds for fillings of square loops in arc complexes.

A separating curve gamma splits S into Y and Z.  Arcs a^Y_1, a^Y_2 in Y
and a^Z_1, a^Z_2 in Z give a 4-loop (a^Y_1, a^Z_1, a^Y_2, a^Z_2) of the
arc complex.  In any disc filling, colour a vertex red when its arc cuts
Y and blue otherwise.  The dual-graph (Gale) argument then finds a red
path from a^Y_1 to a^Y_2 or a blue path from a^Z_1 to a^Z_2.  Projecting
it into Y (or Z) gives a path no longer than the original, and three
edges per triangle turn a distance L into at least ceil(L/3) triangles.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .complex_core import (CombLoop, SimplicialFillingMap, TriangulatedDisc,
                           count_triangles, sort_key, validate_filling)
from .surface import (Arc, Cut, Lamination, basic_curves, dehn_twist, edge_arcs,
                      from_path, intersection_number, new_surface, twist_path)
from .surface.complexes import SurfaceComplex, windowed_paths
from .surface.generate import separating_curve
from .surface.neighborhood import boundary_neighborhood, ribbon_faces

RED, BLUE = "red", "blue"


class HexError(ValueError):
    pass


def _hypotheses(g: int, p: int) -> bool:
    return (g >= 2 and p >= 2) or (g == 1 and p >= 4) or (g == 0 and p >= 6)


@dataclass(frozen=True, eq=False)
class SquareLoopSpec:
    """The square (a^Y_1, a^Z_1, a^Y_2, a^Z_2) around a separating curve.

    ``beta_y`` and ``beta_z`` are the curves whose k-th twists carry
    a^Y_1 to a^Y_2 and a^Z_1 to a^Z_2.
    """

    g: int
    p: int
    k: int
    gamma: Lamination
    cut: Cut = field(repr=False)
    y: int
    z: int
    a_y1: Lamination
    a_z1: Lamination
    a_y2: Lamination
    a_z2: Lamination
    beta_y: Lamination
    beta_z: Lamination

    @property
    def T(self):
        return self.gamma.T

    @property
    def Y(self):
        return self.cut.pieces[self.y]

    @property
    def Z(self):
        return self.cut.pieces[self.z]

    @property
    def arcs(self) -> tuple:
        return (self.a_y1, self.a_z1, self.a_y2, self.a_z2)

    @property
    def loop(self) -> CombLoop:
        return CombLoop([a.weights for a in self.arcs])

    def oracle(self, window: int = 4) -> SurfaceComplex:
        return SurfaceComplex(self.T, "arc", window, extra=self.arcs)

    def to_text(self) -> str:
        rows = [f"square-loop {self.g} {self.p} {self.k}",
                "gamma " + " ".join(map(str, self.gamma.weights))]
        for name, a in zip(("a_y1", "a_z1", "a_y2", "a_z2"), self.arcs):
            rows.append(f"{name} " + " ".join(map(str, a.weights)))
        return "\n".join(rows) + "\n"


def parse_square_loop(text: str) -> SquareLoopSpec:
    """Rebuild a spec from its text form; the arcs must match the rebuild."""
    rows = [r.split() for r in text.splitlines() if r.strip() and not r.startswith("#")]
    if not rows or rows[0][0] != "square-loop" or len(rows[0]) != 4:
        raise ValueError("not a square-loop file")
    g, p, k = (int(x) for x in rows[0][1:])
    spec = build_square_loop(g, p, k)
    want = {r[0]: tuple(int(x) for x in r[1:]) for r in rows[1:]}
    have = {"gamma": spec.gamma.weights}
    have.update(zip(("a_y1", "a_z1", "a_y2", "a_z2"), (a.weights for a in spec.arcs)))
    for key, w in want.items():
        if have.get(key) != w:
            raise ValueError(f"{key} does not match the rebuilt square")
    return spec


def _gamma(T, rng):
    """A separating curve with punctures and positive complexity on both
    sides: first a curve around three punctures, then seeded search."""
    def good(c):
        L = from_path(T, c)
        try:
            pieces = Cut(T, L).pieces
        except ValueError:
            return None
        if len(pieces) == 2 and all(P.punctures and P.xi >= 1 for P in pieces):
            return L
        return None

    if T.num_punctures >= 5:
        try:
            L = good(separating_curve(T, (0, 1, 2)))
        except ValueError:
            L = None
        if L is not None:
            return L
    # boundaries of neighbourhoods of two or three edge curves
    seeds = [from_path(T, c) for c in basic_curves(T)]
    tried = set()
    for i, x in enumerate(seeds):
        for j in range(i + 1, len(seeds)):
            y = seeds[j]
            if intersection_number(x, y):
                continue
            xy = Lamination(T, tuple(a + b for a, b in zip(x.weights, y.weights)))
            for z in seeds:
                if z in (x, y) or not intersection_number(xy, z):
                    continue
                for c, _ in boundary_neighborhood(xy, z).components():
                    if c in tried:
                        continue
                    tried.add(c)
                    L = good(c)
                    if L is not None:
                        return L
    raise HexError("no separating curve found")


def _arc_in(T, cut, piece, gamma, pool):
    """Lightest edge arc in the piece, else the first windowed one."""
    def inside(a):
        return (intersection_number(a, gamma) == 0
                and cut.locate(a.components()[0][0]) == piece)
    for a in pool:
        if inside(a):
            return a
    for window in range(4, 9):
        got = [a for a in windowed_paths(T, window, "arc") if inside(a)]
        if got:
            return min(got, key=lambda L: (sum(map(abs, L.weights)), L.weights))
    raise HexError(f"no arc found in piece {piece}")


def _twister(T, cut, piece, gamma, arc, pool):
    """Lightest curve inside the piece that cuts the arc."""
    for b in pool:
        if b == gamma or intersection_number(b, gamma):
            continue
        if cut.locate(b.components()[0][0]) == piece and intersection_number(b, arc):
            return b
    raise HexError(f"no twisting curve found in piece {piece}")


def build_square_loop(g: int, p: int, k: int) -> SquareLoopSpec:
    if not _hypotheses(g, p):
        raise HexError(f"S_{{{g},{p}}} is outside the supported range")
    if k < 0:
        raise HexError("twist power must be non-negative")
    T = new_surface(g, p)
    rng = random.Random(f"square {g} {p}")
    gamma = _gamma(T, rng)
    cut = Cut(T, gamma)
    y = next(i for i, P in enumerate(cut.pieces) if 0 in P.punctures) \
        if any(0 in P.punctures for P in cut.pieces) else 0
    z = 1 - y
    arcs = [from_path(T, a) for a in edge_arcs(T)]
    arcs.sort(key=lambda L: (sum(map(abs, L.weights)), L.weights))
    base = [from_path(T, c) for c in basic_curves(T)]
    curves = list(base)
    for _ in range(60):
        # twisted edge curves, for pieces whose own edge curves are scarce
        a, b = rng.sample(base, 2)
        curves.append(dehn_twist(a, b, rng.choice((-1, 1))))
    curves = sorted({c.weights: c for c in curves if c.is_multicurve()
                     and len(c.components()) == 1}.values(),
                    key=lambda L: (sum(L.weights), L.weights))
    a_y1 = _arc_in(T, cut, y, gamma, arcs)
    a_z1 = _arc_in(T, cut, z, gamma, arcs)
    b_y = _twister(T, cut, y, gamma, a_y1, curves)
    b_z = _twister(T, cut, z, gamma, a_z1, curves)
    spec = SquareLoopSpec(g, p, k, gamma, cut, y, z, a_y1, a_z1,
                          dehn_twist(a_y1, b_y, k), dehn_twist(a_z1, b_z, k), b_y, b_z)
    for i in range(4):
        u, v = spec.arcs[i], spec.arcs[(i + 1) % 4]
        if intersection_number(u, v):
            raise HexError("square sides do not miss")  # would be a bug
    return spec


# colouring ------------------------------------------------------------------

@dataclass(frozen=True)
class TwoColoring:
    colors: dict

    def __getitem__(self, v):
        return self.colors[v]


def cuts_piece(spec: SquareLoopSpec, L: Lamination, piece: int) -> bool:
    """Whether the arc L cuts the given piece: it crosses gamma or lies in it."""
    if intersection_number(L, spec.gamma):
        return True
    return spec.cut.locate(L.components()[0][0]) == piece


def color_filling(P: TriangulatedDisc, f: SimplicialFillingMap,
                  spec: SquareLoopSpec) -> TwoColoring:
    check = validate_filling(P, f, spec.loop, spec.oracle(1), "bijective")
    if not check:
        raise HexError(f"not a filling of the square: {check.reason}")
    colors = {}
    for v in sorted(P.local_vertices(), key=sort_key):
        try:
            L = Lamination(spec.T, f(v))
            comps = L.components()
        except (ValueError, TypeError) as err:
            raise HexError(f"image of {v!r} is not a lamination") from err
        if len(comps) != 1 or not isinstance(comps[0][0], Arc) or comps[0][1] != 1:
            raise HexError(f"image of {v!r} is not an arc")
        colors[v] = RED if cuts_piece(spec, L, spec.y) else BLUE
    return TwoColoring(colors)


# the dual graph -------------------------------------------------------------

@dataclass(frozen=True)
class GalePath:
    color: str
    path: tuple          # local vertices of P, consecutive ones adjacent
    dual: tuple          # nodes ("tri", i) and ("side", i) walked through

    @property
    def length(self) -> int:
        return len(self.path) - 1


def gale_path(P: TriangulatedDisc, coloring: TwoColoring) -> GalePath:
    bd = P.boundary
    if len(bd) != 4 or len(set(bd)) != 4:
        raise HexError("the boundary is not a 4-cycle")
    cs = [coloring[v] for v in bd]
    if any(cs[i] == cs[(i + 1) % 4] for i in range(4)):
        raise HexError("boundary colouring does not alternate")
    ef = P.edge_faces()
    adj: dict = {}
    crossed = {}

    def link(a, b, e):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
        crossed[frozenset((a, b))] = e

    sides = {frozenset((bd[i], bd[(i + 1) % 4])): i for i in range(4)}
    for e, faces in sorted(ef.items(), key=lambda it: sorted(map(repr, it[0]))):
        a, b = tuple(e)
        if coloring[a] == coloring[b]:
            continue
        if len(faces) == 2:
            link(("tri", faces[0]), ("tri", faces[1]), e)
        else:
            link(("side", sides[e]), ("tri", faces[0]), e)
    for node, nb in adj.items():
        want = 1 if node[0] == "side" else 2
        if len(nb) != want:
            raise HexError(f"dual node {node} has degree {len(nb)}")  # impossible
    walk = [("side", 0)]
    prev = None
    while True:
        nxt = [x for x in adj[walk[-1]] if x != prev]
        prev = walk[-1]
        walk.append(nxt[0])
        if nxt[0][0] == "side":
            break
    edges = [crossed[frozenset((walk[i], walk[i + 1]))] for i in range(len(walk) - 1)]
    for color in (RED, BLUE):
        ends = [next(v for v in e if coloring[v] == color) for e in edges]
        path = [ends[0]]
        for v in ends[1:]:
            if v != path[-1]:
                path.append(v)
        if ends[0] != ends[-1]:
            return GalePath(color, tuple(path), tuple(walk))
    raise HexError("dual path joins two sides at a common corner")  # impossible


# projection and bounds ------------------------------------------------------

def project(spec: SquareLoopSpec, L: Lamination, piece: int) -> Lamination:
    """One arc of the piece for the arc L: L itself when it lies there,
    else the lightest arc of its projection."""
    Y = spec.cut.pieces[piece]
    if intersection_number(L, spec.gamma) == 0:
        got = spec.cut.transfer(L).get(piece)
        if got is None:
            raise HexError("arc misses the piece")
        return got
    K = spec.cut.kappa(L).get(piece)
    if K is None:
        raise HexError("arc has no projection to the piece")
    arcs = [from_path(Y.T, a) for a, _ in K.components()]
    return min(arcs, key=lambda A: A.weights)


def distance_lower_bound(a: Lamination, b: Lamination, Y=None) -> int:
    """0, 1 or 3: a lower bound on the arc-complex distance of a and b.

    3 is returned only when the two arcs fill, that is every complementary
    region is a disc touching at most one end or a once-punctured disc
    away from the ends.
    """
    T = a.T
    if a == b or intersection_number(a, b) == 0:
        return 0
    pa, pb = a.components()[0][0], b.components()[0][0]
    for c, visits in ribbon_faces(T, [pa, pb]):
        if c.is_trivial():
            if len(visits) > 1:
                return 1
        elif c.is_peripheral(T):
            if visits:
                return 1
        else:
            return 1
    return 3


@dataclass(frozen=True)
class GaleCertificate:
    color: str
    dual: tuple
    path: tuple                 # arcs of S (weight tuples) along the path
    projected: tuple            # arcs of the piece (weight tuples)
    piece: int
    triangles: int
    edges: int
    certified: int              # L from distance_lower_bound

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def upper_bound(self) -> int:
        """d(a_1, a_2) in the piece's arc complex is at most this."""
        steps = [self.projected[0]]
        for v in self.projected[1:]:
            if v != steps[-1]:
                steps.append(v)
        return len(steps) - 1

    @property
    def lower_bound(self) -> int:
        return math.ceil(self.certified / 3)

    @property
    def holds(self) -> bool:
        return (self.triangles >= self.lower_bound
                and self.upper_bound >= self.certified
                and self.length <= self.edges <= 3 * self.triangles)

    def to_text(self) -> str:
        rows = [f"gale-certificate {self.color} piece {self.piece}",
                "dual " + " ".join(f"{k}:{i}" for k, i in self.dual)]
        rows += ["path " + " ".join(map(str, w)) for w in self.path]
        rows += ["projected " + " ".join(map(str, w)) for w in self.projected]
        rows.append(f"upper d <= {self.upper_bound}")
        rows.append(f"bound triangles >= ceil({self.certified}/3) = {self.lower_bound}"
                    f" given d >= {self.certified}; triangles = {self.triangles}")
        return "\n".join(rows) + "\n"


def project_and_bound(P: TriangulatedDisc, f: SimplicialFillingMap, gp: GalePath,
                      spec: SquareLoopSpec) -> GaleCertificate:
    piece = spec.y if gp.color == RED else spec.z
    start = spec.a_y1 if gp.color == RED else spec.a_z1
    path = [Lamination(spec.T, f(v)) for v in gp.path]
    if path[0] != start:
        path.reverse()
    proj = [project(spec, L, piece) for L in path]
    for u, v in zip(proj, proj[1:]):
        if u != v and intersection_number(u, v):
            raise HexError("projection moved adjacent arcs apart")  # fatal
    edges = len(P.edge_faces())
    L = distance_lower_bound(proj[0], proj[-1], spec.cut.pieces[piece])
    cert = GaleCertificate(gp.color, gp.dual, tuple(x.weights for x in path),
                           tuple(x.weights for x in proj), piece,
                           count_triangles(P), edges, L)
    if not cert.length <= edges <= 3 * cert.triangles:
        raise HexError("edge count identity failed")  # fatal
    return cert


def certify(P: TriangulatedDisc, f: SimplicialFillingMap,
            spec: SquareLoopSpec) -> GaleCertificate:
    """Colour, extract the monochromatic path, project and bound."""
    coloring = color_filling(P, f, spec)
    return project_and_bound(P, f, gale_path(P, coloring), spec)
