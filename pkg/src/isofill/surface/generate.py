"""Seeded generators of curves and arcs, by twisting simple seeds."""
from __future__ import annotations

import random

from .intersection import twist_path
from .neighborhood import _edge_boundary
from .paths import Arc, Curve
from .triangulation import IdealTriangulation


def basic_curves(T: IdealTriangulation) -> list:
    """Essential curves bounding a neighbourhood of an edge and its ends."""
    out = []
    for e in range(T.E):
        for c in _edge_boundary(T, e):
            if not c.is_trivial() and not c.is_peripheral(T) and c not in out:
                out.append(c)
    out.sort(key=lambda c: (sum(c.weights(T)), c.weights(T)))
    return out


def edge_arcs(T: IdealTriangulation) -> list:
    return [Arc.make(T, (T.primary[e],)) for e in range(T.E)]


def random_curve(T: IdealTriangulation, rng: random.Random, twists: int = 2,
                 cap: int = 40) -> Curve:
    """A seed curve pushed through up to ``twists`` random +-1 twists,
    stopping early once its total weight would pass ``cap``."""
    seeds = basic_curves(T)
    c = rng.choice(seeds)
    for _ in range(twists):
        b = rng.choice(seeds)
        c2 = twist_path(T, c, b, rng.choice((-1, 1)))
        if sum(c2.weights(T)) > cap:
            break
        c = c2
    return c


def random_arc(T: IdealTriangulation, rng: random.Random, twists: int = 2,
               cap: int = 40) -> Arc:
    seeds = basic_curves(T)
    a = rng.choice(edge_arcs(T))
    for _ in range(twists):
        b = rng.choice(seeds)
        a2 = twist_path(T, a, b, rng.choice((-1, 1)))
        if sum(max(x, 0) for x in a2.weights(T)) > cap:
            break
        a = a2
    return a


def separating_curve(T: IdealTriangulation, group) -> Curve:
    """The curve cutting off exactly the punctures in ``group`` (two or
    more, leaving at least two outside unless the surface has genus),
    built by merging the curves around edges that join them."""
    from .cut import Cut
    from .lamination import from_components
    from .neighborhood import boundary_neighborhood
    group = sorted(set(group))
    if len(group) < 2 or (T.num_punctures - len(group) < 2 and T.genus == 0):
        raise ValueError("a separating curve needs two punctures on each side")
    edges = {}
    for e in range(T.E):
        p, q = sorted(T.edge_ends(e))
        if p != q and p in group and q in group:
            edges.setdefault((p, q), e)
    have = {group[0]}
    c = None
    while len(have) < len(group):
        pick = next(((pq, e) for pq, e in sorted(edges.items())
                     if (pq[0] in have) != (pq[1] in have)), None)
        if pick is None:
            raise ValueError("punctures not joined by edges of this triangulation")
        (p, q), e = pick
        ce = [x for x in _edge_boundary(T, e) if not x.is_peripheral(T)]
        have |= {p, q}
        if c is None:
            c = ce[0]
            continue
        got = boundary_neighborhood(from_components(T, [(c, 1)]),
                                    from_components(T, [(ce[0], 1)]))
        for x, _ in got.components():
            sides = [P.punctures for P in Cut(T, from_components(T, [(x, 1)])).pieces]
            if frozenset(have) in sides:
                c = x
                break
        else:
            raise ValueError("no merged curve found")
    return c
