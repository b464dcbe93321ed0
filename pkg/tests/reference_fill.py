"""Naive reference for minimal disc fillings, used as a test oracle.

Breadth-first over multisets of open boundary loops.  A move glues one
triangle onto any boundary edge, with its third vertex either any vertex
of the complex (new interior vertex) or any other boundary position (which
splits the loop).  No canonical forms, no memo beyond a visited set of
sorted states, no fixed edge: deliberately unlike the package search.
"""


def _norm(loop):
    n = len(loop)
    best = None
    for s in (loop, loop[::-1]):
        for r in range(n):
            c = tuple(repr(x) for x in s[r:] + s[:r])
            if best is None or c < best[0]:
                best = (c, s[r:] + s[:r])
    return best[1]


def reference_min_fill(loop, K, max_triangles):
    def ok(u, v):
        return u == v or K.are_adjacent(u, v)

    verts = list(K.vertices())
    start = tuple(sorted([_norm(tuple(loop))], key=repr)) if len(loop) > 2 else ()
    if not start:
        return 0
    frontier = {start}
    seen = {start}
    for cost in range(1, max_triangles + 1):
        nxt = set()
        for state in frontier:
            for idx, L in enumerate(state):
                rest = state[:idx] + state[idx + 1:]
                n = len(L)
                for i in range(n):
                    a, b = L[i], L[(i + 1) % n]
                    pieces_list = []
                    for j in range(n):
                        if j in (i, (i + 1) % n):
                            continue
                        if ok(L[j], a) and ok(L[j], b):
                            # walk b -> ... -> L[j] and L[j] -> ... -> a
                            A = [L[(i + 1 + t) % n] for t in range((j - i - 1) % n + 1)]
                            B = [L[(j + t) % n] for t in range((i - j) % n + 1)]
                            pieces_list.append([A, B])
                    for w in verts:
                        if ok(w, a) and ok(w, b):
                            pieces_list.append([[a, w] + [L[(i + 1 + t) % n] for t in range(n - 1)]])
                    for pieces in pieces_list:
                        new = list(rest) + [_norm(tuple(p)) for p in pieces if len(p) > 2]
                        if sum(len(p) - 2 for p in new) > max_triangles - cost:
                            continue
                        st = tuple(sorted(new, key=repr))
                        if not st:
                            return cost
                        if st not in seen:
                            seen.add(st)
                            nxt.add(st)
        frontier = nxt
    return None
