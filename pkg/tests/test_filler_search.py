import random

import pytest

from isofill.cat0 import suspension_complex
from isofill.complex_core import (AdjacencyOracle, CapabilityError, CombLoop,
                                  FiniteFlagComplex, validate_filling)
from isofill.filler_search import certify_infeasible_within, minimal_fill
from reference_fill import reference_min_fill

# minimal fillings of (p, 0, q, k), k = 1..5, frozen from reference_min_fill
# (naive breadth-first enumerator in tests/reference_fill.py, M = 5 window)
SUSPENSION_MINIMA = {1: 2, 2: 4, 3: 6, 4: 8, 5: 10}


def triangle_complex():
    return FiniteFlagComplex("abc", [("a", "b"), ("b", "c"), ("a", "c")])


def test_single_triangle():
    r = minimal_fill(CombLoop("abc"), triangle_complex(), 3)
    assert r.count == 1 and r.exact
    assert validate_filling(r.disc, r.fmap, CombLoop("abc"), triangle_complex())


def test_suspension_k1_k2():
    K = suspension_complex(4).complex
    r1 = minimal_fill(CombLoop(["p", 0, "q", 1]), K, 3)
    assert r1.count == 2
    r2 = minimal_fill(CombLoop(["p", 0, "q", 2]), K, 6)
    assert r2.count == 4
    assert validate_filling(r2.disc, r2.fmap, CombLoop(["p", 0, "q", 2]), K, "bijective")


def test_infeasible_certificates():
    K = suspension_complex(4).complex
    cert = certify_infeasible_within(CombLoop(["p", 0, "q", 2]), K, 3)
    assert cert.lower_bound == 4
    assert cert.replay()
    cert0 = certify_infeasible_within(CombLoop("abc"), triangle_complex(), 0)
    assert cert0.lower_bound == 1
    with pytest.raises(ValueError):
        certify_infeasible_within(CombLoop(["p", 0, "q", 2]), K, 4)


def test_reference_agrees_on_suspension():
    K = suspension_complex(4).complex
    for k in (1, 2, 3):
        loop = ["p", 0, "q", k]
        assert reference_min_fill(loop, K, 6) == SUSPENSION_MINIMA[k]
        assert minimal_fill(CombLoop(loop), K, 10).count == SUSPENSION_MINIMA[k]


def test_thresholds_increase():
    K = suspension_complex(6).complex
    got = []
    for k in range(1, 6):
        loop = CombLoop(["p", 0, "q", k])
        r = minimal_fill(loop, K, 2 * k + 2)
        certify_infeasible_within(loop, K, r.count - 1)
        got.append(r.count)
    assert got == [SUSPENSION_MINIMA[k] for k in range(1, 6)]
    assert all(a < b for a, b in zip(got, got[1:]))


def test_budget_monotone():
    K = suspension_complex(4).complex
    loop = CombLoop(["p", 0, "q", 3])
    assert not minimal_fill(loop, K, 5).found
    counts = {minimal_fill(loop, K, b).count for b in range(6, 10)}
    assert counts == {6}


def test_short_loops_and_bad_budget():
    K = triangle_complex()
    r = minimal_fill(CombLoop(["a", "b"]), K, 2)
    assert r.count == 1
    assert validate_filling(r.disc, r.fmap, CombLoop(["a", "b"]), K, "monotone-onto")
    with pytest.raises(ValueError):
        minimal_fill(CombLoop("abc"), K, 0)
    with pytest.raises(ValueError):
        minimal_fill(CombLoop(["a", "a", "z"]), FiniteFlagComplex("az"), 3)


def _random_complex(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return FiniteFlagComplex(range(n), edges)


def _random_loop(rng, K, length):
    v = rng.choice(K.vertices())
    loop = [v]
    for _ in range(length - 1):
        nb = K.neighbors(loop[-1])
        if not nb:
            return None
        loop.append(rng.choice(nb))
    if not K.adjacent_or_equal(loop[-1], loop[0]):
        return None
    return loop


def test_agrees_with_reference_on_random_complexes():
    rng = random.Random(11)
    checked = 0
    while checked < 25:
        K = _random_complex(rng, 7, 0.45)
        loop = _random_loop(rng, K, rng.choice([3, 4, 5]))
        if loop is None:
            continue
        ref = reference_min_fill(loop, K, 5)
        got = minimal_fill(CombLoop(loop), K, 5)
        assert got.count == ref, (loop, K.edges())
        if got.found:
            mode = "bijective" if len(set(loop)) == len(loop) else "monotone-onto"
            assert validate_filling(got.disc, got.fmap, CombLoop(loop), K, mode)
        checked += 1


class Partial(AdjacencyOracle):
    """Adjacency only; no enumeration."""

    def __init__(self, K):
        self.K = K

    def are_adjacent(self, u, v):
        return self.K.are_adjacent(u, v)


def test_partial_oracle_is_upper_bound_only():
    K = suspension_complex(3).complex
    r = minimal_fill(CombLoop(["p", 0, "q", 1]), Partial(K), 4)
    assert r.found and not r.exact
    with pytest.raises(CapabilityError):
        certify_infeasible_within(CombLoop(["p", 0, "q", 1]), Partial(K), 1)
