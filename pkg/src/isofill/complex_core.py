"""Flag complexes, combinatorial loops and triangulated discs.

A flag complex is determined by its edge relation, so the only thing a
backing complex has to answer is ``are_adjacent(u, v)``.  Finite complexes
can also enumerate vertices and common neighbours; oracle-backed ones
(curve and arc complexes of a surface) usually cannot.

Fillings are simplicial: a :class:`TriangulatedDisc` is a list of local
vertex triples, and two triangles are glued exactly when they share an
unordered pair of local vertices.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional, Sequence

VertexId = Hashable


class OracleError(KeyError):
    """Raised when an oracle is asked about a vertex it does not know."""


class CapabilityError(RuntimeError):
    """The oracle cannot do what was asked (typically: enumerate)."""


def sort_key(v):
    # mixed vertex types (ints and the apex names 'p', 'q') must still sort
    if isinstance(v, tuple):
        return ("tuple", tuple(sort_key(x) for x in v))
    return (type(v).__name__, v)


class AdjacencyOracle:
    """Base class.  Subclasses implement ``are_adjacent``.

    ``vertices()`` and ``candidate_neighbors()`` raise CapabilityError unless
    overridden.  ``exhaustive`` says whether candidate_neighbors really lists
    every common neighbour.
    """

    exhaustive = False

    def are_adjacent(self, u, v) -> bool:
        raise NotImplementedError

    def adjacent_or_equal(self, u, v) -> bool:
        return u == v or self.are_adjacent(u, v)

    def vertices(self):
        raise CapabilityError("oracle cannot enumerate its vertices")

    def candidate_neighbors(self, u, v):
        raise CapabilityError("oracle has no candidate enumerator")


class FiniteFlagComplex(AdjacencyOracle):
    """The flag closure of a finite graph."""

    exhaustive = True

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        self._adj: dict = {}
        for v in vertices:
            self._adj.setdefault(v, set())
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge at {u!r}")
            self._adj.setdefault(u, set()).add(v)
            self._adj.setdefault(v, set()).add(u)

    def _check(self, v):
        if v not in self._adj:
            raise OracleError(v)

    def are_adjacent(self, u, v) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def vertices(self):
        return sorted(self._adj, key=sort_key)

    def neighbors(self, v):
        self._check(v)
        return sorted(self._adj[v], key=sort_key)

    def edges(self):
        out = []
        for u in self.vertices():
            for v in self.neighbors(u):
                if sort_key(u) < sort_key(v):
                    out.append((u, v))
        return out

    def candidate_neighbors(self, u, v):
        self._check(u)
        self._check(v)
        return sorted(self._adj[u] & self._adj[v], key=sort_key)

    def triangles(self):
        tris = []
        for u, v in self.edges():
            for w in self.candidate_neighbors(u, v):
                if sort_key(w) > sort_key(v):
                    tris.append((u, v, w))
        return tris

    def __eq__(self, other):
        return isinstance(other, FiniteFlagComplex) and self._adj == other._adj

    def __repr__(self):
        return f"FiniteFlagComplex({len(self._adj)} vertices, {len(self.edges())} edges)"


@dataclass(frozen=True)
class CombLoop:
    """A cyclic vertex sequence; consecutive entries adjacent or equal."""

    vertices: tuple

    def __init__(self, vertices: Iterable):
        vs = tuple(vertices)
        if not vs:
            raise ValueError("a loop needs at least one vertex")
        object.__setattr__(self, "vertices", vs)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i % len(self.vertices)]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def canonical(self) -> tuple:
        return canonical_cycle(self.vertices)


def canonical_cycle(seq: Sequence) -> tuple:
    """Lexicographically least rotation or reflection of a cyclic sequence."""
    seq = tuple(seq)
    n = len(seq)
    if n == 0:
        return seq
    best = None
    best_key = None
    for s in (seq, seq[::-1]):
        for r in range(n):
            cand = s[r:] + s[:r]
            key = tuple(sort_key(v) for v in cand)
            if best_key is None or key < best_key:
                best, best_key = cand, key
    return best


def validate_loop(loop: CombLoop, oracle: AdjacencyOracle) -> bool:
    """True iff each cyclically consecutive pair is adjacent or equal.

    An unknown vertex raises OracleError rather than returning False.
    """
    for u, v in loop.edges():
        if not oracle.adjacent_or_equal(u, v):
            return False
    return True


def collapse_cycle(seq: Sequence) -> tuple:
    """Drop cyclically consecutive repeats: (a,a,b,b,a) -> (a,b)."""
    out = []
    for v in seq:
        if not out or out[-1] != v:
            out.append(v)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class TriangulatedDisc:
    """A triangulated compact surface with one boundary circle.

    ``triangles`` are triples of local ids, ``boundary`` is the boundary
    cycle in order.  Gluings are implicit: triangles sharing a pair of
    local ids are glued along that side.
    """

    triangles: tuple
    boundary: tuple
    genus: int = 0

    def __init__(self, triangles: Iterable, boundary: Iterable, genus: int = 0):
        object.__setattr__(self, "triangles", tuple(tuple(t) for t in triangles))
        object.__setattr__(self, "boundary", tuple(boundary))
        object.__setattr__(self, "genus", int(genus))

    def local_vertices(self):
        vs = set(self.boundary)
        for t in self.triangles:
            vs.update(t)
        return vs

    def edge_faces(self) -> dict:
        ef = defaultdict(list)
        for k, t in enumerate(self.triangles):
            for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                ef[frozenset((a, b))].append(k)
        return ef

    @property
    def gluings(self):
        """Pairs of triangle indices glued along a common side."""
        return sorted((tuple(sorted(f)), tuple(sorted(e, key=sort_key)))
                      for e, f in self.edge_faces().items() if len(f) == 2)


def count_triangles(P: TriangulatedDisc) -> int:
    return len(P.triangles)


@dataclass(frozen=True)
class SimplicialFillingMap:
    assignment: dict = field(default_factory=dict)

    def __call__(self, local):
        return self.assignment[local]


@dataclass(frozen=True)
class FillingCheck:
    """Outcome of validate_filling; truthy iff ok."""

    ok: bool
    kind: str = ""  # '', 'structure' or 'map'
    reason: str = ""

    def __bool__(self):
        return self.ok


def check_structure(P: TriangulatedDisc) -> Optional[str]:
    """None if P is a surface with exactly one boundary circle of the
    declared genus and declared boundary; else a reason string."""
    if not P.triangles:
        return "no triangles"
    seen = set()
    for t in P.triangles:
        if len(set(t)) != 3:
            return f"degenerate local triangle {t}"
        key = frozenset(t)
        if key in seen:
            return f"repeated triangle {t}"
        seen.add(key)
    ef = P.edge_faces()
    bd_adj = defaultdict(list)
    for e, faces in ef.items():
        if len(faces) > 2:
            return f"edge {sorted(e, key=sort_key)} in {len(faces)} triangles"
        if len(faces) == 1:
            a, b = tuple(e)
            bd_adj[a].append(b)
            bd_adj[b].append(a)
    if not bd_adj:
        return "closed surface, no boundary"
    for v, nb in bd_adj.items():
        if len(nb) != 2:
            return f"boundary pinched at {v!r}"
    # walk the boundary graph; it must be a single cycle
    start = min(bd_adj, key=sort_key)
    cyc = [start]
    prev, cur = None, start
    while True:
        a, b = bd_adj[cur]
        nxt = a if a != prev else b
        if nxt == start:
            break
        cyc.append(nxt)
        prev, cur = cur, nxt
        if len(cyc) > len(bd_adj):
            return "boundary walk does not close"
    if len(cyc) != len(bd_adj):
        return "more than one boundary component"
    # vertex links must be single fans (path at boundary, cycle inside)
    star = defaultdict(list)
    for t in P.triangles:
        for i in range(3):
            star[t[i]].append((t[(i + 1) % 3], t[(i + 2) % 3]))
    for v, links in star.items():
        ladj = defaultdict(list)
        for a, b in links:
            ladj[a].append(b)
            ladj[b].append(a)
        comp = {links[0][0]}
        stack = [links[0][0]]
        while stack:
            x = stack.pop()
            for y in ladj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        if len(comp) != len(ladj):
            return f"vertex {v!r} is not a manifold point"
    if set(P.boundary) != set(cyc) or len(P.boundary) != len(cyc):
        return "declared boundary differs from the actual boundary"
    n = len(cyc)
    bset = {frozenset((P.boundary[i], P.boundary[(i + 1) % n])) for i in range(n)}
    if any(frozenset((cyc[i], cyc[(i + 1) % n])) not in bset for i in range(n)):
        return "declared boundary order differs from the actual boundary"
    # connectivity through shared edges
    tri_adj = defaultdict(list)
    for faces in ef.values():
        if len(faces) == 2:
            tri_adj[faces[0]].append(faces[1])
            tri_adj[faces[1]].append(faces[0])
    reach, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for y in tri_adj[x]:
            if y not in reach:
                reach.add(y)
                stack.append(y)
    if len(reach) != len(P.triangles):
        return "not connected"
    chi = len(P.local_vertices()) - len(ef) + len(P.triangles)
    if chi != 1 - 2 * P.genus:
        return f"Euler characteristic {chi} does not match genus {P.genus}"
    return None


def _cyclic_match(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    n = len(a)
    for s in (tuple(b), tuple(b)[::-1]):
        for r in range(n):
            if all(a[i] == s[(i + r) % n] for i in range(n)):
                return True
    return False


def validate_filling(P: TriangulatedDisc, f: SimplicialFillingMap, loop: CombLoop,
                     oracle: AdjacencyOracle, boundary_mode: str = "bijective") -> FillingCheck:
    """Check that (P, f) caps off ``loop``.

    ``bijective``: the boundary of P, read in order, is the loop (up to
    rotation and reversal).  ``monotone-onto``: the same after collapsing
    repeated consecutive images on both sides.
    """
    if boundary_mode not in ("bijective", "monotone-onto"):
        raise ValueError(boundary_mode)
    why = check_structure(P)
    if why is not None:
        return FillingCheck(False, "structure", why)
    missing = [v for v in P.local_vertices() if v not in f.assignment]
    if missing:
        return FillingCheck(False, "map", f"unassigned local vertices {missing[:3]}")
    for t in P.triangles:
        img = [f(v) for v in t]
        for i in range(3):
            for j in range(i + 1, 3):
                if not oracle.adjacent_or_equal(img[i], img[j]):
                    return FillingCheck(False, "map", f"non-simplex image {tuple(img)}")
    bimg = [f(v) for v in P.boundary]
    if boundary_mode == "bijective":
        ok = _cyclic_match(bimg, loop.vertices)
    else:
        ok = _cyclic_match(collapse_cycle(bimg), collapse_cycle(loop.vertices))
    if not ok:
        return FillingCheck(False, "map", "boundary mismatch")
    return FillingCheck(True)


# ---- text formats -------------------------------------------------------

class ParseError(ValueError):
    pass


def _atom(tok: str):
    if "," in tok:
        # tuples, e.g. weight vectors, are written comma-joined
        return tuple(_atom(t) for t in tok.split(",") if t)
    try:
        return int(tok)
    except ValueError:
        return tok


def fmt_atom(v) -> str:
    """Inverse of the token parser; a 1-tuple keeps a trailing comma."""
    if isinstance(v, tuple):
        body = ",".join(fmt_atom(x) for x in v)
        return body + "," if len(v) == 1 else body
    return str(v)


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line.split()


def parse_complex(text: str):
    """Parse ``flag-complex v1``.  Returns (complex, shapes, coords); the
    last two are empty unless ``shape``/``coord`` records are present."""
    lines = list(_lines(text))
    if not lines or lines[0] != ["flag-complex", "v1"]:
        raise ParseError("missing header 'flag-complex v1'")
    verts, edges, coords, shapes = [], [], {}, []
    for toks in lines[1:]:
        kind = toks[0]
        if kind == "vertex" and len(toks) == 2:
            verts.append(_atom(toks[1]))
        elif kind == "edge" and len(toks) == 3:
            edges.append((_atom(toks[1]), _atom(toks[2])))
        elif kind == "coord" and len(toks) == 4:
            from fractions import Fraction
            try:
                coords[_atom(toks[1])] = (Fraction(toks[2]), Fraction(toks[3]))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad coordinate: {' '.join(toks)}") from exc
        elif kind == "shape" and len(toks) == 4:
            shapes.append(tuple(_atom(t) for t in toks[1:]))
        else:
            raise ParseError(f"bad record: {' '.join(toks)}")
    vs = set(verts)
    for u, v in edges:
        if u not in vs or v not in vs:
            raise ParseError(f"edge {u} {v} uses an undeclared vertex")
        if u == v:
            raise ParseError(f"self-loop at {u}")
    return FiniteFlagComplex(verts, edges), shapes, coords


def serialize_complex(K: FiniteFlagComplex, shapes=(), coords=None) -> str:
    out = ["flag-complex v1"]
    out += [f"vertex {fmt_atom(v)}" for v in K.vertices()]
    out += [f"edge {fmt_atom(u)} {fmt_atom(v)}" for u, v in K.edges()]
    for s in shapes:
        out.append("shape " + " ".join(fmt_atom(x) for x in s))
    for v in sorted(coords or {}, key=sort_key):
        x, y = coords[v]
        out.append(f"coord {fmt_atom(v)} {x} {y}")
    return "\n".join(out) + "\n"


def parse_loop(text: str) -> CombLoop:
    lines = list(_lines(text))
    if len(lines) != 1 or lines[0][0] != "loop" or len(lines[0]) < 2:
        raise ParseError("expected a single 'loop v1 ... vk' line")
    return CombLoop(_atom(t) for t in lines[0][1:])


def serialize_loop(loop: CombLoop) -> str:
    return "loop " + " ".join(fmt_atom(v) for v in loop) + "\n"


def parse_filling(text: str):
    tris, amap, bd, genus = [], {}, None, 0
    for toks in _lines(text):
        kind = toks[0]
        if kind == "triangle" and len(toks) == 4:
            tris.append(tuple(_atom(t) for t in toks[1:]))
        elif kind == "map" and len(toks) == 3:
            amap[_atom(toks[1])] = _atom(toks[2])
        elif kind == "boundary" and len(toks) >= 2:
            bd = [_atom(t) for t in toks[1:]]
        elif kind == "genus" and len(toks) == 2:
            genus = int(toks[1])
        else:
            raise ParseError(f"bad record: {' '.join(toks)}")
    if bd is None:
        raise ParseError("missing boundary line")
    return TriangulatedDisc(tris, bd, genus), SimplicialFillingMap(amap)


def serialize_filling(P: TriangulatedDisc, f: SimplicialFillingMap) -> str:
    out = ["triangle " + " ".join(fmt_atom(v) for v in t) for t in P.triangles]
    for k in sorted(f.assignment, key=sort_key):
        out.append(f"map {fmt_atom(k)} {fmt_atom(f.assignment[k])}")
    out.append("boundary " + " ".join(fmt_atom(v) for v in P.boundary))
    if P.genus:
        out.append(f"genus {P.genus}")
    return "\n".join(out) + "\n"
