"""Exact search for disc fillings with few triangles.

Every simplicial disc filling a loop of length n >= 4 has a triangle T on
the boundary edge (v0, v1).  Its third vertex w is either

* interior: removing T leaves a disc filling (v0, w, v1, v2, ...), or
* a boundary vertex v_j: T splits the disc into fillings of
  (v1 .. v_j) and (v_j .. v_{n-1}, v0), either of which may be a bare edge.

So branching on the third vertex of one fixed edge is complete.  The
ear, spur, insertion and chord-split moves are all special cases: a spur
(v_{i-1} = v_{i+1}) is an ear whose triangle has a repeated image vertex.
Costs depend only on the image sequence, so results are memoized on the
canonical (least rotation/reflection) form.  A filling has
F = n + 2i - 2 >= n - 2 triangles, which gives the pruning bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .complex_core import (AdjacencyOracle, CapabilityError, CombLoop,
                           SimplicialFillingMap, TriangulatedDisc, canonical_cycle,
                           sort_key, validate_loop)


@dataclass
class FillResult:
    disc: Optional[TriangulatedDisc]
    fmap: Optional[SimplicialFillingMap]
    count: Optional[int]
    budget: int
    exact: bool = True          # False: candidate enumeration was partial
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.disc is not None

    @property
    def boundary_mode(self) -> str:
        if self.disc is not None and len(self.disc.boundary) != len(set(self.disc.boundary)):
            return "monotone-onto"
        return "bijective"

    def __repr__(self):
        if self.found:
            tag = "" if self.exact else ", upper bound only"
            return f"FillResult({self.count} triangles{tag})"
        return f"ExhaustedBudget({self.budget})"


@dataclass
class InfeasibilityCertificate:
    """Replayable record that no disc with <= budget triangles exists.

    ``table`` maps each canonical loop met during the search to the lower
    bound proven for it; ``replay()`` redoes the search from scratch and
    checks it reaches the same table.
    """

    loop: tuple
    budget: int
    table: dict = field(repr=False)
    nodes: int = 0
    oracle: object = field(default=None, repr=False, compare=False)

    @property
    def lower_bound(self) -> int:
        return self.budget + 1

    def replay(self) -> bool:
        s = _Searcher(self.oracle)
        res = s.run(self.loop, self.budget)
        return res is None and s.table() == self.table


class _Searcher:
    def __init__(self, oracle: AdjacencyOracle):
        self.K = oracle
        self.memo: dict = {}    # canonical loop -> ('exact', v) | ('lb', v)
        self.nodes = 0
        self.partial = not oracle.exhaustive
        self._cand_cache: dict = {}

    def table(self):
        return {k: v for k, v in self.memo.items()}

    def adj(self, u, v):
        return u == v or self.K.are_adjacent(u, v)

    def cands(self, u, v):
        key = (u, v)
        got = self._cand_cache.get(key)
        if got is None:
            try:
                common = list(self.K.candidate_neighbors(u, v))
            except CapabilityError:
                common = []
                self.partial = True
            got = sorted(set(common) | {u, v}, key=sort_key)
            self._cand_cache[key] = got
        return got

    # cost of a loop of images, or None if above budget
    def cost(self, L: tuple, b: int) -> Optional[int]:
        n = len(L)
        if n <= 2:
            return 0        # a bare edge inside a split
        if n - 2 > b:
            return None
        if n == 3:
            return 1
        key = canonical_cycle(L)
        hit = self.memo.get(key)
        if hit is not None:
            kind, v = hit
            if kind == "exact":
                return v if v <= b else None
            if v > b:
                return None
        self.nodes += 1
        best = None
        for opt in self.options(key):
            cap = (best - 1) if best is not None else b
            c = self.option_cost(key, opt, cap)
            if c is not None and (best is None or c < best):
                best = c
                if best == n - 2:
                    break
        if best is None:
            prev = hit[1] if hit else 0
            self.memo[key] = ("lb", max(prev, b + 1))
        else:
            self.memo[key] = ("exact", best)
        return best

    def options(self, L: tuple):
        """Moves at the fixed edge (L[0], L[1]), in a fixed order."""
        n = len(L)
        a, c = L[0], L[1]
        for j in range(2, n):
            if self.adj(L[j], a) and self.adj(L[j], c):
                yield ("split", j)
        for u in self.cands(a, c):
            yield ("insert", u)

    def option_cost(self, L: tuple, opt, cap: int) -> Optional[int]:
        kind, arg = opt
        if kind == "split":
            A = L[1:arg + 1]
            B = L[arg:] + L[:1]
            lbB = max(len(B) - 2, 0)
            cA = self.cost(A, cap - 1 - lbB)
            if cA is None:
                return None
            cB = self.cost(B, cap - 1 - cA)
            if cB is None:
                return None
            return 1 + cA + cB
        c = self.cost((L[0], arg) + L[1:], cap - 1)
        return None if c is None else 1 + c

    def run(self, loop: tuple, budget: int):
        """Iterative deepening; returns the exact minimum or None."""
        for b in range(max(len(loop) - 2, 1), budget + 1):
            c = self.cost(loop, b)
            if c is not None:
                return c
        return None


def _canonical_placed(placed: list) -> list:
    """Rotate/reflect a list of (local, image) pairs into canonical image order."""
    target = canonical_cycle(tuple(p[1] for p in placed))
    n = len(placed)
    for s in (placed, placed[::-1]):
        for r in range(n):
            cand = s[r:] + s[:r]
            if tuple(p[1] for p in cand) == target:
                return cand
    raise AssertionError("canonical form not reachable")


def _build(s: _Searcher, placed: list, total: int, tris: list, assign: dict) -> None:
    """Replay the memo to realize a filling of cost ``total``."""
    n = len(placed)
    if n <= 2:
        return
    if n == 3:
        tris.append(tuple(p[0] for p in placed))
        return
    placed = _canonical_placed(placed)
    L = tuple(p[1] for p in placed)
    for opt in list(s.options(L)):
        if s.option_cost(L, opt, total) != total:
            continue
        kind, arg = opt
        if kind == "split":
            tris.append((placed[0][0], placed[1][0], placed[arg][0]))
            A = placed[1:arg + 1]
            B = placed[arg:] + placed[:1]
            cA = s.cost(tuple(p[1] for p in A), total)
            _build(s, A, cA, tris, assign)
            _build(s, B, total - 1 - cA, tris, assign)
        else:
            w = len(assign)
            assign[w] = arg
            tris.append((placed[0][0], w, placed[1][0]))
            _build(s, [placed[0], (w, arg)] + placed[1:], total - 1, tris, assign)
        return
    raise AssertionError("no move realizes the memoized cost")


def _short_loop_fill(loop: CombLoop):
    vs = list(loop.vertices)
    imgs = vs + [vs[-1]] * (3 - len(vs))
    P = TriangulatedDisc([(0, 1, 2)], [0, 1, 2])
    return P, SimplicialFillingMap({i: imgs[i] for i in range(3)})


def minimal_fill(loop: CombLoop, oracle: AdjacencyOracle, budget: int) -> FillResult:
    """Least-triangle disc filling of ``loop`` if one has <= budget triangles.

    ``exact`` on the result is False when the oracle's candidate list is
    not exhaustive; the count is then only an upper bound.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if not validate_loop(loop, oracle):
        raise ValueError("not a combinatorial loop in this complex")
    if len(loop) < 3:
        P, f = _short_loop_fill(loop)
        return FillResult(P, f, 1, budget, True, 0)
    s = _Searcher(oracle)
    L = tuple(loop.vertices)
    total = s.run(L, budget)
    if total is None:
        return FillResult(None, None, None, budget, not s.partial, s.nodes)
    assign = {i: v for i, v in enumerate(L)}
    tris: list = []
    _build(s, [(i, v) for i, v in enumerate(L)], total, tris, assign)
    P = TriangulatedDisc(tris, list(range(len(L))))
    return FillResult(P, SimplicialFillingMap(assign), total, budget,
                      not s.partial, s.nodes)


def certify_infeasible_within(loop: CombLoop, oracle: AdjacencyOracle,
                              budget: int) -> InfeasibilityCertificate:
    """Exhaust the search up to ``budget`` triangles; raise if a filling exists."""
    if not oracle.exhaustive:
        raise CapabilityError("infeasibility needs an exhaustively enumerable oracle")
    if not validate_loop(loop, oracle):
        raise ValueError("not a combinatorial loop in this complex")
    L = tuple(loop.vertices)
    if len(L) < 3:
        if budget >= 1:
            raise ValueError("loop has a filling within budget")
        return InfeasibilityCertificate(L, budget, {}, 0, oracle)
    s = _Searcher(oracle)
    if budget >= 1 and s.run(L, budget) is not None:
        raise ValueError("loop has a filling within budget")
    return InfeasibilityCertificate(L, budget, s.table(), s.nodes, oracle)
