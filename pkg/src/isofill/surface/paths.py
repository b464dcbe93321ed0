"""Curves and arcs as reduced paths in the dual ribbon graph.

A curve is a cyclic word of darts.  An arc is bi-infinite: it leaves its
first puncture along a spiral and enters its last one along a spiral.  We
store a finite *window*; before it the path keeps turning +2, after it
+1.  Turn +1 keeps the corner on the right, turn +2 on the left.

For a reduced arc the window runs from the dart before the first +1 turn
to the dart after the last +2 turn.  A one-dart window is the arc
isotopic to that dart's edge.  Otherwise the inner darts window[1:-1] are
the edge crossings of the straightened arc.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .triangulation import IdealTriangulation, rot


def turn(T: IdealTriangulation, a: int, b: int) -> int:
    y = T.glue[a]
    if b // 3 != y // 3:
        raise ValueError(f"darts {a}, {b} are not consecutive")
    return (b - y) % 3


def reverse_word(T: IdealTriangulation, w) -> tuple:
    return tuple(T.glue[d] for d in reversed(w))


def free_reduce(T: IdealTriangulation, w) -> list:
    out: list = []
    for d in w:
        if out and d == T.glue[out[-1]]:
            out.pop()
        else:
            out.append(d)
    return out


def cyclic_reduce(T: IdealTriangulation, w) -> list:
    w = free_reduce(T, w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == T.glue[w[j]]:
        i += 1
        j -= 1
    w = w[i:j + 1]
    if len(w) == 1 and T.glue[w[0]] // 3 != w[0] // 3:
        # a lone dart closes up only round a self-folded triangle
        raise ValueError("word is not a closed path")
    return w


def _min_rotation(w: tuple) -> tuple:
    if not w:
        return w
    return min(w[k:] + w[:k] for k in range(len(w)))


@dataclass(frozen=True)
class Curve:
    """Closed path, cyclically reduced, in canonical rotation/orientation."""

    word: tuple

    @staticmethod
    def make(T: IdealTriangulation, w) -> "Curve":
        w = tuple(cyclic_reduce(T, w))
        return Curve(min(_min_rotation(w), _min_rotation(reverse_word(T, w))))

    def turns(self, T) -> list:
        w = self.word
        return [turn(T, w[k - 1], w[k]) for k in range(len(w))]

    def is_trivial(self) -> bool:
        return not self.word

    def is_peripheral(self, T) -> bool:
        return bool(self.word) and len(set(self.turns(T))) == 1

    def weights(self, T) -> list:
        w = [0] * T.E
        for d in self.word:
            w[T.labels[d]] += 1
        return w

    def dart(self, k: int) -> int:
        return self.word[k % len(self.word)]

    def reversed(self, T) -> tuple:
        return reverse_word(T, self.word)


def unroll_arc(T: IdealTriangulation, window, back: int, fwd: int) -> list:
    """Window with ``back`` tail darts before it and ``fwd`` after it."""
    pre = []
    d = window[0]
    for _ in range(back):
        d = T.glue[rot(d, 1)]
        pre.append(d)
    out = pre[::-1] + list(window)
    d = window[-1]
    for _ in range(fwd):
        d = rot(T.glue[d], 1)
        out.append(d)
    return out


def tail_length(T: IdealTriangulation, n: int) -> int:
    return n + 3 * T.F + 6


def window_of(T: IdealTriangulation, w: list) -> tuple:
    """Window of a long reduced arc word whose ends are spiral tails."""
    ts = [turn(T, w[k - 1], w[k]) for k in range(1, len(w))]
    # ts[k-1] is the turn into w[k]
    ones = [k for k in range(1, len(w)) if ts[k - 1] == 1]
    twos = [k for k in range(1, len(w)) if ts[k - 1] == 2]
    if not ones or not twos:
        raise ValueError("arc word has no spiral tails")
    A = ones[0]
    B = max(twos[-1], A - 1)
    if A < 2 or B > len(w) - 3:
        raise ValueError("tails too short to read off the window")
    return tuple(w[A - 1:B + 1])


@dataclass(frozen=True)
class Arc:
    """Bi-infinite path stored by its canonical window."""

    window: tuple

    @staticmethod
    def make(T: IdealTriangulation, w) -> "Arc":
        """Arc from any window (tails implied), reduced and canonicalized."""
        w = tuple(w)
        k = tail_length(T, len(w))
        red = free_reduce(T, unroll_arc(T, w, k, k))
        win = window_of(T, red)
        rev = reverse_word(T, win)
        return Arc(min(win, rev))

    def is_edge(self) -> bool:
        return len(self.window) == 1

    def weights(self, T) -> list:
        w = [0] * T.E
        if self.is_edge():
            w[T.labels[self.window[0]]] = -1
        else:
            for d in self.window[1:-1]:
                w[T.labels[d]] += 1
        return w

    def ends(self, T) -> tuple:
        """(start puncture, end puncture)."""
        # the first dart leaves its triangle through side x after the
        # reversed spiral round corner x
        return (T.corner_puncture[self.window[0]], T.spiral_puncture(self.window[-1]))

    def word(self, T, back: int, fwd: int) -> list:
        return unroll_arc(T, self.window, back, fwd)

    def reversed(self, T) -> tuple:
        return reverse_word(T, self.window)


def weights_of(T: IdealTriangulation, comps) -> list:
    """Sum of component weights, components given as (path, multiplicity)."""
    w = [0] * T.E
    for c, m in comps:
        for e, x in enumerate(c.weights(T)):
            w[e] += m * x
    return w
